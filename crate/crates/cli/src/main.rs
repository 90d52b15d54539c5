//! `pi1`: exact computational group theory at the command line.

mod commands;
mod formats;
mod render;
mod report;

use clap::{Parser, Subcommand, ValueEnum};

use commands::{CliError, CmdResult, Conventions, RsTarget};
use formats::CommutatorConvention;
use pi1_core::alexander::ConventionChoice;
use pi1_core::presentations::TietzeLimits;
use report::OutputFormat;

#[derive(Parser)]
#[command(
    name = "pi1",
    about = "Presentations, coset enumeration, Fox calculus and twisted Alexander polynomials, exactly",
    version
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    /// Commutator convention used by the `[a,b]` word sugar.
    #[arg(long, global = true, value_enum, default_value_t = CommArg::AbAB)]
    commutator: CommArg,
    /// Force the sqrt2/i token assignment instead of auto-resolving.
    #[arg(long, global = true, value_enum, default_value_t = Sqrt2Arg::Auto)]
    sqrt2: Sqrt2Arg,
    /// Run the fixture self-test (same as the `selftest` subcommand).
    #[arg(long)]
    selftest: bool,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum FormatArg {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum CommArg {
    /// [a,b] = a b a^-1 b^-1
    #[value(name = "abAB")]
    AbAB,
    /// [a,b] = a^-1 b^-1 a b
    #[value(name = "ABab")]
    ABab,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Sqrt2Arg {
    /// Pin the assignment by representation verification.
    Auto,
    /// sqrt2 = xi^3 - xi, i = xi^2
    #[value(name = "xi3-xi")]
    Standard,
    /// sqrt2 = xi - xi^3, i = xi^2
    #[value(name = "xi-xi3")]
    Conjugate,
}

#[derive(Subcommand)]
enum Command {
    /// Tietze-simplify a presentation.
    Simplify {
        #[arg(long)]
        presentation: String,
        #[arg(long, default_value_t = 1000)]
        max_iterations: usize,
        #[arg(long, default_value_t = 4)]
        growth_factor: usize,
    },
    /// Abelianization via Smith normal form.
    Abelianize {
        #[arg(long)]
        presentation: String,
    },
    /// Quotient by the normal closure of extra relators.
    Quotient {
        #[arg(long)]
        presentation: String,
        /// Extra relator (repeatable).
        #[arg(long = "word", required = true)]
        words: Vec<String>,
    },
    /// Orbifold fundamental group of a punctured surface with cone points.
    Orbifold {
        #[arg(long, default_value_t = 0)]
        genus: u32,
        #[arg(long)]
        punctures: u32,
        /// Comma-separated cone orders, e.g. `2,3`.
        #[arg(long, value_delimiter = ',')]
        cone_orders: Vec<u32>,
    },
    /// Zariski–Van Kampen presentation from braid monodromy.
    Zvk {
        #[arg(long)]
        braids: String,
    },
    /// Coset table (from a finite quotient or Todd–Coxeter) followed by
    /// Reidemeister–Schreier rewriting.
    Rs {
        #[arg(long)]
        presentation: String,
        /// Cyclic target, e.g. `a:3 b:2 mod 6`.
        #[arg(long)]
        cyclic_hom: Option<String>,
        /// Symmetric target, e.g. `x:(1,2) y:(1,3) deg 4`.
        #[arg(long)]
        perm_hom: Option<String>,
        /// Subgroup generator word for Todd–Coxeter (repeatable).
        #[arg(long = "subgroup")]
        subgroup: Vec<String>,
        #[arg(long)]
        max_cosets: Option<usize>,
        /// Parent-group word (in the subgroup) to kill after rewriting
        /// (repeatable).
        #[arg(long = "kill")]
        kill: Vec<String>,
    },
    /// Todd–Coxeter coset enumeration, table output.
    ToddCoxeter {
        #[arg(long)]
        presentation: String,
        #[arg(long = "subgroup")]
        subgroup: Vec<String>,
        #[arg(long)]
        max_cosets: Option<usize>,
    },
    /// Fox derivative matrix over the group ring.
    Fox {
        #[arg(long)]
        presentation: String,
    },
    /// Elementary-ideal gcds of the abelianized Fox matrix.
    Alexander {
        #[arg(long)]
        presentation: String,
        /// Grading, e.g. `x:1,0 y:0,1 w:0,0` (unlisted generators get 0).
        #[arg(long)]
        eps: String,
    },
    /// Twisted Alexander polynomial via Wada's method.
    Twisted {
        #[arg(long)]
        presentation: String,
        #[arg(long)]
        rep: String,
        /// Generator to delete, or `auto`.
        #[arg(long)]
        delete: Option<String>,
    },
    /// Count homomorphisms to a symmetric group.
    Homcount {
        #[arg(long)]
        presentation: String,
        #[arg(long)]
        degree: usize,
        /// Break the count down by image cycle types.
        #[arg(long)]
        classes: bool,
    },
    /// Search for a homomorphism separating two words.
    Separate {
        #[arg(long)]
        presentation: String,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
    },
    /// Mapping-torus CW presentation from monodromy data.
    Cw {
        #[arg(long)]
        monodromy: String,
    },
    /// Homology of the presentation 2-complex.
    Homology {
        #[arg(long)]
        presentation: String,
    },
    /// Wedge homotopy type of a plane curve complement.
    Wedge {
        #[arg(long)]
        free_rank: Option<u32>,
        #[arg(long)]
        cyclic: Option<u32>,
        /// Euler characteristic of the curve.
        #[arg(long)]
        chi_curve: i64,
    },
    /// Free-kernel rank of the maximal cyclic quotient.
    KernelRank {
        #[arg(long)]
        free_rank: Option<u64>,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        q: Option<u64>,
        #[arg(long)]
        punctures: Option<u32>,
        #[arg(long, value_delimiter = ',')]
        cone_orders: Vec<u32>,
        #[arg(long)]
        lcm: Option<u64>,
    },
    /// Minimal sets of an upward-closed threshold family.
    Threshold {
        #[arg(long)]
        instance: String,
    },
    /// Verify a representation file against a presentation.
    VerifyRep {
        #[arg(long)]
        presentation: String,
        #[arg(long)]
        rep: String,
    },
    /// Bounded search for a product-of-conjugates certificate.
    Consequence {
        #[arg(long)]
        presentation: String,
        #[arg(long)]
        word: String,
        #[arg(long, default_value_t = 2)]
        depth: usize,
        #[arg(long, default_value_t = 2)]
        width: usize,
    },
    /// Parse and verify all embedded fixtures.
    Selftest,
}

fn dispatch(cli: &Cli) -> CmdResult {
    let conv = Conventions {
        commutator: match cli.commutator {
            CommArg::AbAB => CommutatorConvention::AbAB,
            CommArg::ABab => CommutatorConvention::ABab,
        },
        sqrt2: match cli.sqrt2 {
            Sqrt2Arg::Auto => None,
            Sqrt2Arg::Standard => Some(ConventionChoice {
                sqrt2_standard: true,
                i_standard: true,
            }),
            Sqrt2Arg::Conjugate => Some(ConventionChoice {
                sqrt2_standard: false,
                i_standard: true,
            }),
        },
    };
    let Some(command) = &cli.command else {
        if cli.selftest {
            return commands::selftest(&conv);
        }
        return Err(CliError::Usage(
            "a subcommand is required; see --help".into(),
        ));
    };
    match command {
        Command::Simplify {
            presentation,
            max_iterations,
            growth_factor,
        } => commands::simplify(
            presentation,
            &TietzeLimits {
                growth_factor: *growth_factor,
                max_iterations: *max_iterations,
            },
            &conv,
        ),
        Command::Abelianize { presentation } => commands::abelianize(presentation, &conv),
        Command::Quotient {
            presentation,
            words,
        } => commands::quotient(presentation, words, &conv),
        Command::Orbifold {
            genus,
            punctures,
            cone_orders,
        } => commands::orbifold(*genus, *punctures, cone_orders, &conv),
        Command::Zvk { braids } => commands::zvk(braids, &conv),
        Command::Rs {
            presentation,
            cyclic_hom,
            perm_hom,
            subgroup,
            max_cosets,
            kill,
        } => {
            let p = commands::load_presentation(presentation, &conv)?;
            let target = match (cyclic_hom, perm_hom, subgroup.is_empty()) {
                (Some(spec), None, true) => {
                    let (images, modulus) = commands::parse_cyclic_hom(spec, &p)?;
                    RsTarget::Cyclic { images, modulus }
                }
                (None, Some(spec), true) => {
                    RsTarget::Perms(commands::parse_perm_hom(spec, &p)?)
                }
                (None, None, false) => RsTarget::Subgroup {
                    words: subgroup.clone(),
                    max_cosets: max_cosets.unwrap_or_else(commands::coset_cap_from_env),
                },
                _ => {
                    return Err(CliError::Usage(
                        "give exactly one of --cyclic-hom, --perm-hom, or --subgroup".into(),
                    ))
                }
            };
            commands::rs_command(presentation, target, kill, &conv)
        }
        Command::ToddCoxeter {
            presentation,
            subgroup,
            max_cosets,
        } => commands::todd_coxeter_cmd(presentation, subgroup, *max_cosets, &conv),
        Command::Fox { presentation } => commands::fox(presentation, &conv),
        Command::Alexander { presentation, eps } => {
            commands::alexander(presentation, eps, &conv)
        }
        Command::Twisted {
            presentation,
            rep,
            delete,
        } => commands::twisted(presentation, rep, delete.as_deref(), &conv),
        Command::Homcount {
            presentation,
            degree,
            classes,
        } => commands::homcount(presentation, *degree, *classes, &conv),
        Command::Separate {
            presentation,
            a,
            b,
            max_degree,
        } => commands::separate(presentation, a, b, *max_degree, &conv),
        Command::Cw { monodromy } => commands::cw(monodromy, &conv),
        Command::Homology { presentation } => commands::homology(presentation, &conv),
        Command::Wedge {
            free_rank,
            cyclic,
            chi_curve,
        } => commands::wedge(*free_rank, *cyclic, *chi_curve, &conv),
        Command::KernelRank {
            free_rank,
            p,
            q,
            punctures,
            cone_orders,
            lcm,
        } => commands::kernel_rank(*free_rank, *p, *q, *punctures, cone_orders, *lcm, &conv),
        Command::Threshold { instance } => commands::threshold(instance, &conv),
        Command::VerifyRep { presentation, rep } => {
            commands::verify_rep(presentation, rep, &conv)
        }
        Command::Consequence {
            presentation,
            word,
            depth,
            width,
        } => commands::consequence(presentation, word, *depth, *width, &conv),
        Command::Selftest => commands::selftest(&conv),
    }
}

fn main() -> std::process::ExitCode {
    let cli = Cli::parse();
    let format = match cli.format {
        FormatArg::Text => OutputFormat::Text,
        FormatArg::Json => OutputFormat::Json,
    };
    match dispatch(&cli) {
        Ok(report) => {
            print!("{}", report.render(format));
            std::process::ExitCode::SUCCESS
        }
        Err(CliError::Math(msg)) => {
            eprintln!("error: {msg}");
            std::process::ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            std::process::ExitCode::from(2)
        }
    }
}
