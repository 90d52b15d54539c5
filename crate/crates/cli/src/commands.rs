//! Subcommand implementations. Every command returns a [`Report`]; errors
//! split into usage/parse problems (exit 2) and mathematical failures
//! (exit 1).

use num_integer::Integer;

use pi1_core::alexander::{
    alexander_poly_gcds, fox_matrix, resolve_representation, twisted_alexander_wada,
    ConventionChoice, ConventionReport, DeleteChoice, RepTemplate, Representation,
};
use pi1_core::presentations::{
    consequence_check_bounded, orbifold_presentation, tietze_simplify, verify_certificate,
    ConsequenceOutcome, Freeness, OrbifoldSignature, Presentation, TietzeLimits,
};
use pi1_core::quotients::{
    count_homs, eval_word, find_separating_hom, verify_finite_hom, FiniteHom, Perm,
};
use pi1_core::subgroups::{
    coset_table_from_cyclic_hom, coset_table_from_perm_hom, kernel_rank_expected,
    reidemeister_schreier, todd_coxeter, CosetTable, RsOutput, DEFAULT_COSET_CAP,
};
use pi1_core::topology::{
    cw_fibration_presentation, orbifold_kernel_rank, presentation_homology,
    threshold_minimal_sets, wedge_homotopy_type, WedgeMode,
};
use pi1_core::words::{GroupRingElem, Word};

use crate::formats::{
    parse_braids, parse_monodromy, parse_presentation, parse_representation, parse_threshold,
    parse_word, serialize_presentation, serialize_word, CommutatorConvention,
};
use crate::render::{bilaurent_string, laurent_string, nf_string};
use crate::report::Report;

pub enum CliError {
    /// malformed flags or input files: exit 2
    Usage(String),
    /// well-formed input, mathematically failing run: exit 1
    Math(String),
}

impl From<crate::formats::ParseError> for CliError {
    fn from(e: crate::formats::ParseError) -> Self {
        CliError::Usage(e.to_string())
    }
}

pub type CmdResult = Result<Report, CliError>;

fn math<T: std::fmt::Display>(e: T) -> CliError {
    CliError::Math(e.to_string())
}

/// Conventions in force for a run; stamped into every report.
#[derive(Clone, Copy)]
pub struct Conventions {
    pub commutator: CommutatorConvention,
    /// `None` = auto-resolve; `Some(choice)` forces the token assignment.
    pub sqrt2: Option<ConventionChoice>,
}

impl Conventions {
    pub fn stamp(&self, report: &mut Report) {
        let comm = match self.commutator {
            CommutatorConvention::AbAB => "[a,b] = a b a^-1 b^-1",
            CommutatorConvention::ABab => "[a,b] = a^-1 b^-1 a b",
        };
        report.push("convention.commutator", comm);
        let sqrt2 = match self.sqrt2 {
            None => "auto (pinned by representation verification)".to_string(),
            Some(c) => c.describe(),
        };
        report.push("convention.sqrt2", sqrt2);
        report.push(
            "convention.braid",
            "sigma_i: x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i; words act left to right",
        );
    }
}

fn read_file(path: &str) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read `{path}`: {e}")))
}

pub fn load_presentation(path: &str, conv: &Conventions) -> Result<Presentation, CliError> {
    Ok(parse_presentation(&read_file(path)?, conv.commutator)?)
}

fn word_arg(p: &Presentation, s: &str, conv: &Conventions) -> Result<Word, CliError> {
    Ok(parse_word(s, p.gens(), conv.commutator)?)
}

fn push_presentation(report: &mut Report, key: &str, p: &Presentation) {
    report.push(&format!("{key}.generators"), p.gens().join(" "));
    report.push_list(
        &format!("{key}.relators"),
        p.relators().iter().map(|r| serialize_word(p, r)).collect(),
    );
    report.push(&format!("{key}.abelianization"), p.abelianization().to_string());
}

fn verdict_string(v: &Freeness) -> String {
    match v {
        Freeness::FreeOfRank(k) => format!("free of rank {k}"),
        Freeness::Inconclusive => "inconclusive (relators remain)".to_string(),
    }
}

// ---- commands ----

pub fn simplify(
    path: &str,
    limits: &TietzeLimits,
    conv: &Conventions,
) -> CmdResult {
    let p = load_presentation(path, conv)?;
    let out = tietze_simplify(&p, limits);
    let mut report = Report::new("simplify");
    conv.stamp(&mut report);
    push_presentation(&mut report, "output", &out.presentation);
    report.push("verdict", verdict_string(&out.verdict));
    report.push("moves", out.trace.moves.len() as u64);
    report.push("limit_hit", out.limit_hit);
    Ok(report)
}

pub fn abelianize(path: &str, conv: &Conventions) -> CmdResult {
    let p = load_presentation(path, conv)?;
    let mut report = Report::new("abelianize");
    conv.stamp(&mut report);
    report.push("abelianization", p.abelianization().to_string());
    Ok(report)
}

pub fn quotient(path: &str, words: &[String], conv: &Conventions) -> CmdResult {
    let p = load_presentation(path, conv)?;
    let extra: Vec<Word> = words
        .iter()
        .map(|s| word_arg(&p, s, conv))
        .collect::<Result<_, _>>()?;
    let q = p.quotient_by_normal_closure(&extra).map_err(math)?;
    let mut report = Report::new("quotient");
    conv.stamp(&mut report);
    push_presentation(&mut report, "output", &q);
    Ok(report)
}

pub fn orbifold(
    genus: u32,
    punctures: u32,
    cone_orders: &[u32],
    conv: &Conventions,
) -> CmdResult {
    let sig = OrbifoldSignature::new(genus, punctures, cone_orders.to_vec());
    let p = orbifold_presentation(&sig).map_err(math)?;
    let mut report = Report::new("orbifold");
    conv.stamp(&mut report);
    report.push("chi_orb", sig.chi_orb().to_string());
    push_presentation(&mut report, "output", &p);
    Ok(report)
}

pub fn zvk(path: &str, conv: &Conventions) -> CmdResult {
    let (strands, braids) = parse_braids(&read_file(path)?)?;
    let p = pi1_core::topology::zvk_presentation(strands, &braids).map_err(math)?;
    let out = tietze_simplify(&p, &TietzeLimits::default());
    let mut report = Report::new("zvk");
    conv.stamp(&mut report);
    report.push("strands", strands as u64);
    report.push("braids", braids.len() as u64);
    push_presentation(&mut report, "raw", &p);
    push_presentation(&mut report, "simplified", &out.presentation);
    report.push("verdict", verdict_string(&out.verdict));
    Ok(report)
}

/// Target homomorphism for the `rs` command.
pub enum RsTarget {
    Cyclic { images: Vec<u64>, modulus: u64 },
    Perms(Vec<Perm>),
    Subgroup { words: Vec<String>, max_cosets: usize },
}

/// `a:3 b:2 mod 6`
pub fn parse_cyclic_hom(spec: &str, p: &Presentation) -> Result<(Vec<u64>, u64), CliError> {
    let (assign, modulus) = spec
        .split_once("mod")
        .ok_or_else(|| CliError::Usage("cyclic hom needs `... mod n`".into()))?;
    let modulus: u64 = modulus
        .trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("bad modulus in `{spec}`")))?;
    let mut images = vec![0u64; p.rank()];
    for part in assign.split_whitespace() {
        let (name, value) = part
            .split_once(':')
            .ok_or_else(|| CliError::Usage(format!("bad assignment `{part}`")))?;
        let idx = p
            .gen_index(name)
            .ok_or_else(|| CliError::Usage(format!("unknown generator `{name}`")))?;
        images[idx] = value
            .parse()
            .map_err(|_| CliError::Usage(format!("bad value in `{part}`")))?;
    }
    Ok((images, modulus))
}

/// `x:(1,2) y:(1,3)(2,4) z:id deg 4`
pub fn parse_perm_hom(spec: &str, p: &Presentation) -> Result<Vec<Perm>, CliError> {
    let (assign, degree) = spec
        .split_once("deg")
        .ok_or_else(|| CliError::Usage("perm hom needs `... deg n`".into()))?;
    let degree: usize = degree
        .trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("bad degree in `{spec}`")))?;
    let mut images = vec![Perm::identity(degree); p.rank()];
    for part in assign.split_whitespace() {
        let (name, value) = part
            .split_once(':')
            .ok_or_else(|| CliError::Usage(format!("bad assignment `{part}`")))?;
        let idx = p
            .gen_index(name)
            .ok_or_else(|| CliError::Usage(format!("unknown generator `{name}`")))?;
        images[idx] = parse_perm(value, degree)?;
    }
    Ok(images)
}

pub fn parse_perm(s: &str, degree: usize) -> Result<Perm, CliError> {
    if s == "id" {
        return Ok(Perm::identity(degree));
    }
    let mut cycles = Vec::new();
    for chunk in s.split(')') {
        let chunk = chunk.trim_start_matches('(');
        if chunk.is_empty() {
            continue;
        }
        let cycle: Vec<usize> = chunk
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<usize>()
                    .map_err(|_| CliError::Usage(format!("bad cycle entry `{x}`")))
            })
            .collect::<Result<_, _>>()?;
        cycles.push(cycle);
    }
    Perm::from_cycles(degree, &cycles)
        .ok_or_else(|| CliError::Usage(format!("`{s}` is not a permutation of 1..{degree}")))
}

fn coset_table_for(
    p: &Presentation,
    target: &RsTarget,
    conv: &Conventions,
) -> Result<CosetTable, CliError> {
    match target {
        RsTarget::Cyclic { images, modulus } => {
            coset_table_from_cyclic_hom(p, images, *modulus).map_err(math)
        }
        RsTarget::Perms(perms) => coset_table_from_perm_hom(p, perms).map_err(math),
        RsTarget::Subgroup { words, max_cosets } => {
            let ws: Vec<Word> = words
                .iter()
                .map(|s| word_arg(p, s, conv))
                .collect::<Result<_, _>>()?;
            todd_coxeter(p, &ws, *max_cosets).map_err(math)
        }
    }
}

fn push_rs_output(report: &mut Report, p: &Presentation, rs: &RsOutput) {
    report.push_list(
        "schreier_generators",
        rs.generator_words
            .iter()
            .map(|(name, w)| format!("{name} = {}", serialize_word(p, w)))
            .collect(),
    );
    report.push("raw_relator_count", rs.raw_relator_count as u64);
    push_presentation(report, "subgroup", &rs.raw);
}

pub fn rs_command(
    path: &str,
    target: RsTarget,
    kill: &[String],
    conv: &Conventions,
) -> CmdResult {
    let p = load_presentation(path, conv)?;
    let table = coset_table_for(&p, &target, conv)?;
    let rs = reidemeister_schreier(&p, &table, &TietzeLimits::default()).map_err(math)?;
    let mut report = Report::new("rs");
    conv.stamp(&mut report);
    report.push("index", table.index() as u64);
    push_rs_output(&mut report, &p, &rs);
    let final_pres = if kill.is_empty() {
        report.push("killed", "");
        rs.simplified.clone()
    } else {
        let mut rewritten = Vec::new();
        for spec in kill {
            let w = word_arg(&p, spec, conv)?;
            let r = rs.rewriter.rewrite(&w).map_err(math)?;
            rewritten.push(r);
        }
        report.push_list(
            "killed",
            kill.iter()
                .zip(&rewritten)
                .map(|(s, r)| format!("{s} -> {}", serialize_word(&rs.raw, r)))
                .collect(),
        );
        let q = rs.raw.quotient_by_normal_closure(&rewritten).map_err(math)?;
        tietze_simplify(&q, &TietzeLimits::default())
    };
    push_presentation(&mut report, "simplified", &final_pres.presentation);
    report.push("verdict", verdict_string(&final_pres.verdict));
    Ok(report)
}

fn grel_string(p: &Presentation, e: &GroupRingElem) -> String {
    if e.is_zero() {
        return "0".to_string();
    }
    let mut parts = Vec::new();
    for (w, c) in e.terms() {
        let ws = if w.is_empty() {
            "1".to_string()
        } else if w.len() > 1 {
            format!("({})", serialize_word(p, w))
        } else {
            serialize_word(p, w)
        };
        let piece = if *c == 1.into() {
            ws
        } else if *c == (-1).into() {
            format!("-{ws}")
        } else {
            format!("{c}*{ws}")
        };
        parts.push(piece);
    }
    let mut out = String::new();
    for (i, part) in parts.iter().enumerate() {
        if i == 0 {
            out.push_str(part);
        } else if let Some(stripped) = part.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(stripped);
        } else {
            out.push_str(" + ");
            out.push_str(part);
        }
    }
    out
}

pub fn fox(path: &str, conv: &Conventions) -> CmdResult {
    let p = load_presentation(path, conv)?;
    let m = fox_matrix(&p);
    let mut report = Report::new("fox");
    conv.stamp(&mut report);
    report.push("rows", m.rows as u64);
    report.push("cols", m.cols as u64);
    for (i, row) in m.entries.iter().enumerate() {
        report.push_list(
            &format!("row.{}", i + 1),
            row.iter().map(|e| grel_string(&p, e)).collect(),
        );
    }
    Ok(report)
}

/// `x:1,0 y:0,1 w:0,0` (second exponent optional, defaults to 0)
pub fn parse_eps(spec: &str, p: &Presentation) -> Result<Vec<(i64, i64)>, CliError> {
    let mut eps = vec![(0i64, 0i64); p.rank()];
    for part in spec.split_whitespace() {
        let (name, value) = part
            .split_once(':')
            .ok_or_else(|| CliError::Usage(format!("bad eps assignment `{part}`")))?;
        let idx = p
            .gen_index(name)
            .ok_or_else(|| CliError::Usage(format!("unknown generator `{name}`")))?;
        let pair = match value.split_once(',') {
            Some((a, b)) => (
                a.parse()
                    .map_err(|_| CliError::Usage(format!("bad exponent `{a}`")))?,
                b.parse()
                    .map_err(|_| CliError::Usage(format!("bad exponent `{b}`")))?,
            ),
            None => (
                value
                    .parse()
                    .map_err(|_| CliError::Usage(format!("bad exponent `{value}`")))?,
                0,
            ),
        };
        eps[idx] = pair;
    }
    Ok(eps)
}

pub fn alexander(path: &str, eps_spec: &str, conv: &Conventions) -> CmdResult {
    let p = load_presentation(path, conv)?;
    let eps = parse_eps(eps_spec, &p)?;
    let out = alexander_poly_gcds(&p, &eps).map_err(math)?;
    let mut report = Report::new("alexander");
    conv.stamp(&mut report);
    if out.no_relators {
        report.push("note", "no relators: empty Alexander matrix");
    }
    report.push_list(
        "minor_gcds",
        out.dk
            .iter()
            .enumerate()
            .map(|(i, d)| format!("d{} = {}", i + 1, bilaurent_string(d)))
            .collect(),
    );
    Ok(report)
}

fn resolve_rep(
    p: &Presentation,
    template: &RepTemplate,
    conv: &Conventions,
) -> Result<(Representation, ConventionReport), CliError> {
    match conv.sqrt2 {
        None => resolve_representation(p, template).map_err(math),
        Some(choice) => {
            let rep = template.instantiate(&choice).map_err(math)?;
            let report = rep.verify(p);
            if !report.matrices_ok {
                return Err(CliError::Math(format!(
                    "forced convention {} does not verify: relator `{}` fails",
                    choice.describe(),
                    report.failing_matrix_relator.unwrap_or_default()
                )));
            }
            Ok((
                rep,
                ConventionReport {
                    chosen: choice,
                    passing: vec![choice],
                    delta0_pinned: false,
                },
            ))
        }
    }
}

pub fn twisted(
    path: &str,
    rep_path: &str,
    delete: Option<&str>,
    conv: &Conventions,
) -> CmdResult {
    let p = load_presentation(path, conv)?;
    let template = parse_representation(&read_file(rep_path)?, p.gens())?;
    let (rep, conv_report) = resolve_rep(&p, &template, conv)?;
    let choice = match delete {
        None | Some("auto") => DeleteChoice::Auto,
        Some(name) => {
            let idx = p
                .gen_index(name)
                .ok_or_else(|| CliError::Usage(format!("unknown generator `{name}`")))?;
            DeleteChoice::Generator(idx)
        }
    };
    let out = twisted_alexander_wada(&p, &rep, choice, "t").map_err(math)?;
    let cc = Some(&conv_report.chosen);
    let mut report = Report::new("twisted");
    conv.stamp(&mut report);
    report.push("convention.resolved", conv_report.chosen.describe());
    report.push_list(
        "convention.passing",
        conv_report.passing.iter().map(|c| c.describe()).collect(),
    );
    report.push("convention.delta0_pinned", conv_report.delta0_pinned);
    report.push(
        "deleted_generator",
        out.deleted
            .map(|j| p.gens()[j].clone())
            .unwrap_or_else(|| "none (no relators)".to_string()),
    );
    report.push("delta1", laurent_string(&out.delta1, cc));
    report.push("delta0", laurent_string(&out.delta0, cc));
    match &out.delta {
        Some(d) => {
            report.push("delta", laurent_string(d, cc));
            report.push("divisible", true);
        }
        None => {
            report.push(
                "delta",
                format!(
                    "({}) / ({})",
                    laurent_string(&out.delta1, cc),
                    laurent_string(&out.delta0, cc)
                ),
            );
            report.push("divisible", false);
        }
    }
    Ok(report)
}

pub fn verify_rep(path: &str, rep_path: &str, conv: &Conventions) -> CmdResult {
    let p = load_presentation(path, conv)?;
    let template = parse_representation(&read_file(rep_path)?, p.gens())?;
    let (rep, conv_report) = resolve_rep(&p, &template, conv)?;
    let verify = rep.verify(&p);
    let mut report = Report::new("verify-rep");
    conv.stamp(&mut report);
    report.push("convention.resolved", conv_report.chosen.describe());
    report.push_list(
        "convention.passing",
        conv_report.passing.iter().map(|c| c.describe()).collect(),
    );
    report.push("matrices_ok", verify.matrices_ok);
    report.push("grading_ok", verify.grading_ok);
    if let Some(r) = verify.failing_grading_relator {
        report.push("failing_grading_relator", r);
    }
    report.push("degree", rep.degree() as u64);
    for (g, name) in p.gens().iter().enumerate() {
        let rows: Vec<String> = (0..rep.degree())
            .map(|i| {
                let cols: Vec<String> = (0..rep.degree())
                    .map(|j| nf_string(&rep.matrix(g)[(i, j)], Some(&conv_report.chosen)))
                    .collect();
                format!("[{}]", cols.join(", "))
            })
            .collect();
        report.push(&format!("matrix.{name}"), format!("[{}]", rows.join(", ")));
        report.push(&format!("eps.{name}"), rep.eps()[g]);
    }
    Ok(report)
}

pub fn homcount(path: &str, degree: usize, classes: bool, conv: &Conventions) -> CmdResult {
    let p = load_presentation(path, conv)?;
    let out = count_homs(&p, degree, classes).map_err(math)?;
    let mut report = Report::new("homcount");
    conv.stamp(&mut report);
    report.push("degree", degree as u64);
    report.push("count", out.total);
    if let Some(by_class) = out.by_class {
        report.push_list(
            "by_cycle_type",
            by_class
                .into_iter()
                .map(|(k, v)| format!("{k}: {v}"))
                .collect(),
        );
    }
    Ok(report)
}

pub fn separate(
    path: &str,
    a: &str,
    b: &str,
    max_degree: usize,
    conv: &Conventions,
) -> CmdResult {
    let p = load_presentation(path, conv)?;
    let wa = word_arg(&p, a, conv)?;
    let wb = word_arg(&p, b, conv)?;
    let mut report = Report::new("separate");
    conv.stamp(&mut report);
    for degree in 1..=max_degree {
        if let Some(h) = find_separating_hom(&p, &wa, &wb, degree).map_err(math)? {
            report.push("witness_found", true);
            report.push("degree", degree as u64);
            for (g, name) in p.gens().iter().enumerate() {
                report.push(&format!("image.{name}"), h.images[g].cycle_string());
            }
            report.push(
                "image_of_a",
                eval_word(&h.images, degree, &wa).cycle_string(),
            );
            report.push(
                "image_of_b",
                eval_word(&h.images, degree, &wb).cycle_string(),
            );
            return Ok(report);
        }
    }
    report.push("witness_found", false);
    report.push("max_degree", max_degree as u64);
    Ok(report)
}

pub fn cw(path: &str, conv: &Conventions) -> CmdResult {
    let data = parse_monodromy(&read_file(path)?)?;
    let p = cw_fibration_presentation(&data);
    let mut report = Report::new("cw");
    conv.stamp(&mut report);
    report.push("loops", data.loops() as u64);
    report.push("fiber_rank", data.fiber_rank() as u64);
    let chi = 1 - p.rank() as i64 + p.relators().len() as i64;
    report.push("chi", chi);
    push_presentation(&mut report, "output", &p);
    Ok(report)
}

pub fn homology(path: &str, conv: &Conventions) -> CmdResult {
    let p = load_presentation(path, conv)?;
    let h = presentation_homology(&p);
    let mut report = Report::new("homology");
    conv.stamp(&mut report);
    report.push("h1", h.h1.to_string());
    report.push("h2", h.h2.to_string());
    report.push("chi", h.chi);
    report.push("rank_d2", h.rank_d2 as u64);
    Ok(report)
}

pub fn wedge(
    free_rank: Option<u32>,
    cyclic: Option<u32>,
    chi_curve: i64,
    conv: &Conventions,
) -> CmdResult {
    let mode = match (free_rank, cyclic) {
        (Some(r), None) => WedgeMode::Free { rank: r },
        (None, Some(d)) => WedgeMode::Cyclic { order: d },
        _ => {
            return Err(CliError::Usage(
                "give exactly one of --free-rank or --cyclic".into(),
            ))
        }
    };
    let w = wedge_homotopy_type(mode, chi_curve).map_err(math)?;
    let mut report = Report::new("wedge");
    conv.stamp(&mut report);
    report.push("circles", w.circles);
    report.push("spheres", w.spheres);
    match w.cyclic_order {
        Some(d) => {
            report.push(
                "description",
                format!("(S^1 cup_{d} e^2) v ({} S^2)", w.spheres),
            );
        }
        None => {
            report.push(
                "description",
                format!("({} S^1) v ({} S^2)", w.circles, w.spheres),
            );
        }
    }
    Ok(report)
}

#[allow(clippy::too_many_arguments)]
pub fn kernel_rank(
    free_rank: Option<u64>,
    p_ord: Option<u64>,
    q_ord: Option<u64>,
    punctures: Option<u32>,
    cone_orders: &[u32],
    lcm: Option<u64>,
    conv: &Conventions,
) -> CmdResult {
    let mut report = Report::new("kernel-rank");
    conv.stamp(&mut report);
    match (free_rank, p_ord, q_ord, punctures) {
        (Some(r), Some(p), Some(q), None) => {
            let rank = kernel_rank_expected(r, p, q).map_err(math)?;
            report.push("formula", format!("{p}*{q}*{r} + ({p}-1)*({q}-1)"));
            report.push("rank", rank);
        }
        (None, None, None, Some(k)) => {
            let sig = OrbifoldSignature::new(0, k, cone_orders.to_vec());
            let m = lcm.unwrap_or_else(|| {
                cone_orders.iter().fold(1u64, |acc, &x| acc.lcm(&(x as u64)))
            });
            let rank = orbifold_kernel_rank(&sig, m).map_err(math)?;
            report.push("chi_orb", sig.chi_orb().to_string());
            report.push("lcm", m);
            report.push("rank", rank);
        }
        _ => {
            return Err(CliError::Usage(
                "give either --free-rank with --p and --q, or --punctures with --cone-orders"
                    .into(),
            ))
        }
    }
    Ok(report)
}

pub fn threshold(path: &str, conv: &Conventions) -> CmdResult {
    let inst = parse_threshold(&read_file(path)?)?;
    let minimal = threshold_minimal_sets(&inst).map_err(math)?;
    let mut report = Report::new("threshold");
    conv.stamp(&mut report);
    report.push("ground_set", inst.values().join(" "));
    report.push("monotone", true);
    report.push_list(
        "minimal_sets",
        minimal.iter().map(|&m| inst.set_string(m)).collect(),
    );
    Ok(report)
}

pub fn consequence(
    path: &str,
    word: &str,
    depth: usize,
    width: usize,
    conv: &Conventions,
) -> CmdResult {
    let p = load_presentation(path, conv)?;
    let w = word_arg(&p, word, conv)?;
    let out = consequence_check_bounded(&p, &w, depth, width).map_err(math)?;
    let mut report = Report::new("consequence");
    conv.stamp(&mut report);
    match out {
        ConsequenceOutcome::Witness(cert) => {
            assert!(verify_certificate(&p, &w, &cert));
            report.push("witness_found", true);
            report.push("depth", cert.factors.len() as u64);
            report.push_list(
                "factors",
                cert.factors
                    .iter()
                    .map(|f| {
                        let conj = if f.conjugator.is_empty() {
                            "1".to_string()
                        } else {
                            serialize_word(&p, &f.conjugator)
                        };
                        format!(
                            "conjugator {} relator {}{}",
                            conj,
                            f.relator_index + 1,
                            if f.inverted { " inverted" } else { "" }
                        )
                    })
                    .collect(),
            );
            report.push("reverified_by_free_reduction", true);
        }
        ConsequenceOutcome::Inconclusive => {
            report.push("witness_found", false);
            report.push("note", "inconclusive within the given bounds");
        }
    }
    Ok(report)
}

pub fn todd_coxeter_cmd(
    path: &str,
    subgroup: &[String],
    max_cosets: Option<usize>,
    conv: &Conventions,
) -> CmdResult {
    let p = load_presentation(path, conv)?;
    let words: Vec<Word> = subgroup
        .iter()
        .map(|s| word_arg(&p, s, conv))
        .collect::<Result<_, _>>()?;
    let cap = max_cosets.unwrap_or_else(coset_cap_from_env);
    let table = todd_coxeter(&p, &words, cap).map_err(math)?;
    let mut report = Report::new("todd-coxeter");
    conv.stamp(&mut report);
    report.push("index", table.index() as u64);
    for (g, name) in p.gens().iter().enumerate() {
        let row: Vec<String> = table.action()[g]
            .iter()
            .map(|c| (c + 1).to_string())
            .collect();
        report.push(&format!("action.{name}"), row.join(" "));
    }
    Ok(report)
}

pub fn coset_cap_from_env() -> usize {
    std::env::var("PI1_COSET_CAP")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_COSET_CAP)
}

// ---- selftest over the embedded fixtures ----

macro_rules! fixture {
    ($name:literal) => {
        ($name, include_str!(concat!("../fixtures/", $name)))
    };
}

pub const PRESENTATION_FIXTURES: [(&str, &str); 11] = [
    fixture!("presentation1.pres"),
    fixture!("presentation2.pres"),
    fixture!("tildeG1.pres"),
    fixture!("tildeG2.pres"),
    fixture!("tildeK1-hand.pres"),
    fixture!("z1-hand.pres"),
    fixture!("free2.pres"),
    fixture!("z2z3.pres"),
    fixture!("z2z5.pres"),
    fixture!("f1z2z3.pres"),
    fixture!("trefoil.pres"),
];

pub const RHO1_FIXTURE: (&str, &str) = fixture!("rho1.rep");
pub const THRESHOLD_FIXTURE: (&str, &str) = fixture!("f-x6y6.thr");
pub const BRAID_FIXTURE: (&str, &str) = fixture!("sigma1sq.braid");
pub const MONO_FIXTURE: (&str, &str) = fixture!("identity-2x3.mono");

pub fn selftest(conv: &Conventions) -> CmdResult {
    let mut report = Report::new("selftest");
    conv.stamp(&mut report);
    let mut checks: Vec<String> = Vec::new();
    let fail = |msg: String| -> CliError { CliError::Math(msg) };

    // every presentation fixture parses and round-trips
    for (name, text) in PRESENTATION_FIXTURES {
        let p = parse_presentation(text, conv.commutator)
            .map_err(|e| fail(format!("{name}: {e}")))?;
        let back = parse_presentation(&serialize_presentation(&p), conv.commutator)
            .map_err(|e| fail(format!("{name} roundtrip: {e}")))?;
        if back != p {
            return Err(fail(format!("{name}: roundtrip mismatch")));
        }
        checks.push(format!("{name}: parse + roundtrip ok"));
    }

    // fixture files agree with the built-in constructors
    let by_name = |n: &str| {
        PRESENTATION_FIXTURES
            .iter()
            .find(|(name, _)| *name == n)
            .map(|(_, text)| parse_presentation(text, conv.commutator).unwrap())
            .unwrap()
    };
    let pairs: [(&str, Presentation); 6] = [
        ("presentation1.pres", pi1_core::fixtures::presentation_one()),
        ("presentation2.pres", pi1_core::fixtures::presentation_two()),
        ("tildeG1.pres", pi1_core::fixtures::tilde_g1()),
        ("tildeG2.pres", pi1_core::fixtures::tilde_g2()),
        ("tildeK1-hand.pres", pi1_core::fixtures::tilde_k1_hand()),
        ("z1-hand.pres", pi1_core::fixtures::z1_hand()),
    ];
    for (name, expect) in pairs {
        if by_name(name) != expect {
            return Err(fail(format!("{name}: differs from the built-in fixture")));
        }
        checks.push(format!("{name}: matches built-in fixture"));
    }

    // rho1 resolves and reproduces p(t)
    let p2 = by_name("presentation2.pres");
    let template = parse_representation(RHO1_FIXTURE.1, p2.gens())
        .map_err(|e| fail(format!("rho1.rep: {e}")))?;
    let (rep, conv_report) =
        resolve_representation(&p2, &template).map_err(|e| fail(format!("rho1.rep: {e}")))?;
    if !(conv_report.chosen.sqrt2_standard && conv_report.chosen.i_standard) {
        return Err(fail("rho1.rep: unexpected convention chosen".into()));
    }
    let wada = twisted_alexander_wada(&p2, &rep, DeleteChoice::Auto, "t")
        .map_err(|e| fail(format!("rho1.rep: {e}")))?;
    let field = rep.field().clone();
    let p_t = crate::render::sqrt2_quadratic(&field, &conv_report.chosen);
    if wada.delta.as_ref() != Some(&p_t.unit_normalize()) {
        return Err(fail("twisted invariant differs from t^2 - sqrt2*t + 1".into()));
    }
    checks.push("rho1.rep: verifies, twisted invariant = t^2 - sqrt2*t + 1".into());

    // representation roundtrip at the concrete-matrix level
    let serialized = crate::formats::serialize_representation(&rep, p2.gens());
    let template2 = parse_representation(&serialized, p2.gens())
        .map_err(|e| fail(format!("rep roundtrip: {e}")))?;
    let rep2 = template2
        .instantiate(&conv_report.chosen)
        .map_err(|e| fail(format!("rep roundtrip: {e}")))?;
    for g in 0..p2.rank() {
        if rep2.matrix(g) != rep.matrix(g) || rep2.eps()[g] != rep.eps()[g] {
            return Err(fail("representation roundtrip mismatch".into()));
        }
    }
    checks.push("rho1.rep: serialize/parse roundtrip ok".into());

    // threshold fixture: monotone with the four sign pairs minimal
    let inst = parse_threshold(THRESHOLD_FIXTURE.1)
        .map_err(|e| fail(format!("threshold fixture: {e}")))?;
    let minimal =
        threshold_minimal_sets(&inst).map_err(|e| fail(format!("threshold fixture: {e}")))?;
    if minimal.len() != 4 || minimal.iter().any(|m| m.count_ones() != 2) {
        return Err(fail("threshold fixture: wrong minimal family".into()));
    }
    checks.push("f-x6y6.thr: monotone, four minimal pairs".into());

    // braid fixture drives the full-twist presentation
    let (strands, braids) =
        parse_braids(BRAID_FIXTURE.1).map_err(|e| fail(format!("braid fixture: {e}")))?;
    let (_, braids_again) =
        parse_braids(&crate::formats::serialize_braid(&braids[0]))
            .map_err(|e| fail(format!("braid roundtrip: {e}")))?;
    if braids_again[0] != braids[0] {
        return Err(fail("braid roundtrip mismatch".into()));
    }
    checks.push("sigma1sq.braid: roundtrip ok".into());
    let zvk_p = pi1_core::topology::zvk_presentation(strands, &braids)
        .map_err(|e| fail(format!("braid fixture: {e}")))?;
    if zvk_p.abelianization().to_string() != "Z^2" {
        return Err(fail("sigma1sq.braid: wrong abelianization".into()));
    }
    checks.push("sigma1sq.braid: full twist gives Z^2 abelianization".into());

    // monodromy fixture: chi = 2
    let mono =
        parse_monodromy(MONO_FIXTURE.1).map_err(|e| fail(format!("mono fixture: {e}")))?;
    let cwp = cw_fibration_presentation(&mono);
    if 1 - cwp.rank() as i64 + cwp.relators().len() as i64 != 2 {
        return Err(fail("identity-2x3.mono: wrong Euler characteristic".into()));
    }
    checks.push("identity-2x3.mono: chi = 2".into());

    // phi separates x from v x on presentation (1)
    let p1 = by_name("presentation1.pres");
    let phi: FiniteHom = pi1_core::fixtures::phi_sigma4();
    if !verify_finite_hom(&p1, &phi).unwrap_or(false) {
        return Err(fail("phi fixture does not verify".into()));
    }
    checks.push("phi: verifies on presentation1".into());

    report.push_list("checks", checks);
    report.push("ok", true);
    Ok(report)
}
