//! HLT-style Todd–Coxeter coset enumeration with a coincidence queue.
//!
//! Cosets are numbered in first-touch order; coincidences are resolved by
//! union-find with the smaller representative surviving. Reads resolve
//! through the union-find, so stale pointers in dead rows stay harmless.

use std::collections::VecDeque;

use crate::presentations::Presentation;
use crate::words::Word;

use super::{CosetTable, SubgroupError};

pub const DEFAULT_COSET_CAP: usize = 1_000_000;

struct Enumerator {
    ngens: usize,
    /// tab[2g] = action of generator g, tab[2g+1] = action of its inverse.
    tab: Vec<Vec<Option<usize>>>,
    parent: Vec<usize>,
    live: usize,
    cap: usize,
    queue: VecDeque<(usize, usize)>,
}

fn slot(letter: i32) -> usize {
    let g = letter.unsigned_abs() as usize - 1;
    if letter > 0 {
        2 * g
    } else {
        2 * g + 1
    }
}

impl Enumerator {
    fn new(ngens: usize, cap: usize) -> Self {
        let mut e = Enumerator {
            ngens,
            tab: vec![Vec::new(); 2 * ngens],
            parent: Vec::new(),
            live: 0,
            cap,
            queue: VecDeque::new(),
        };
        e.new_coset();
        e
    }

    fn new_coset(&mut self) -> usize {
        let n = self.parent.len();
        self.parent.push(n);
        for col in self.tab.iter_mut() {
            col.push(None);
        }
        self.live += 1;
        n
    }

    fn find(&mut self, mut c: usize) -> usize {
        while self.parent[c] != c {
            self.parent[c] = self.parent[self.parent[c]];
            c = self.parent[c];
        }
        c
    }

    fn get(&mut self, c: usize, letter: i32) -> Option<usize> {
        let raw = self.tab[slot(letter)][c]?;
        Some(self.find(raw))
    }

    /// Record `c * letter = d`, queueing a coincidence on conflict.
    fn deduce(&mut self, c: usize, letter: i32, d: usize) {
        if let Some(e) = self.get(c, letter) {
            if e != d {
                self.queue.push_back((e, d));
            }
            return;
        }
        if let Some(e2) = self.get(d, -letter) {
            if e2 != c {
                self.queue.push_back((e2, c));
            }
        }
        self.tab[slot(letter)][c] = Some(d);
        self.tab[slot(-letter)][d] = Some(c);
    }

    fn process_coincidences(&mut self) {
        while let Some((a, b)) = self.queue.pop_front() {
            let a = self.find(a);
            let b = self.find(b);
            if a == b {
                continue;
            }
            let (s, l) = if a < b { (a, b) } else { (b, a) };
            self.parent[l] = s;
            self.live -= 1;
            for si in 0..2 * self.ngens {
                if let Some(d) = self.tab[si][l] {
                    let d = self.find(d);
                    match self.tab[si][s].map(|e| self.find(e)) {
                        None => {
                            self.tab[si][s] = Some(d);
                            // keep the reverse direction coherent
                            let rev = si ^ 1;
                            match self.tab[rev][d].map(|e| self.find(e)) {
                                None => self.tab[rev][d] = Some(s),
                                Some(e) if e != s => self.queue.push_back((e, s)),
                                _ => {}
                            }
                        }
                        Some(e) if e != d => self.queue.push_back((e, d)),
                        _ => {}
                    }
                }
            }
        }
    }

    /// Scan `w` from coset `c`, defining new cosets to close the cycle.
    fn scan_and_fill(&mut self, c: usize, w: &Word) -> Result<(), SubgroupError> {
        let letters = w.letters();
        if letters.is_empty() {
            return Ok(());
        }
        loop {
            let c = self.find(c);
            // forward sweep
            let mut f = c;
            let mut i = 0;
            while i < letters.len() {
                match self.get(f, letters[i]) {
                    Some(d) => {
                        f = d;
                        i += 1;
                    }
                    None => break,
                }
            }
            if i == letters.len() {
                if f != c {
                    self.queue.push_back((f, c));
                    self.process_coincidences();
                }
                return Ok(());
            }
            // backward sweep
            let mut b = c;
            let mut j = letters.len();
            while j > i {
                match self.get(b, -letters[j - 1]) {
                    Some(d) => {
                        b = d;
                        j -= 1;
                    }
                    None => break,
                }
            }
            if j == i {
                if f != b {
                    self.queue.push_back((f, b));
                    self.process_coincidences();
                }
                return Ok(());
            }
            if j == i + 1 {
                self.deduce(f, letters[i], b);
                self.process_coincidences();
                return Ok(());
            }
            // gap of length >= 2: define one coset and rescan
            if self.parent.len() >= self.cap {
                return Err(SubgroupError::CosetLimitExceeded { cap: self.cap });
            }
            let n = self.new_coset();
            self.deduce(f, letters[i], n);
            self.process_coincidences();
        }
    }
}

/// HLT coset enumeration for the subgroup generated by `subgroup_gens`.
// indexed loops throughout: the union-find wants `&mut` while we walk indices
#[allow(clippy::needless_range_loop)]
pub fn todd_coxeter(
    p: &Presentation,
    subgroup_gens: &[Word],
    max_cosets: usize,
) -> Result<CosetTable, SubgroupError> {
    assert!(p.rank() > 0, "enumeration needs at least one generator");
    for w in subgroup_gens {
        w.check_rank(p.rank())
            .map_err(|_| SubgroupError::DegreeMismatch("subgroup word out of range".into()))?;
    }
    let mut e = Enumerator::new(p.rank(), max_cosets.max(1));
    for w in subgroup_gens {
        e.scan_and_fill(0, w)?;
    }
    let mut alpha = 0;
    while alpha < e.parent.len() {
        if e.find(alpha) != alpha {
            alpha += 1;
            continue;
        }
        for r in p.relators() {
            e.scan_and_fill(alpha, r)?;
            if e.find(alpha) != alpha {
                break;
            }
        }
        if e.find(alpha) == alpha {
            for g in 1..=p.rank() as i32 {
                for letter in [g, -g] {
                    if e.get(alpha, letter).is_none() {
                        if e.parent.len() >= e.cap {
                            return Err(SubgroupError::CosetLimitExceeded { cap: e.cap });
                        }
                        let n = e.new_coset();
                        e.deduce(alpha, letter, n);
                        e.process_coincidences();
                    }
                }
            }
        }
        alpha += 1;
    }
    // compress to live cosets in first-touch order
    let mut map = vec![usize::MAX; e.parent.len()];
    let mut live = Vec::new();
    for c in 0..e.parent.len() {
        if e.find(c) == c {
            map[c] = live.len();
            live.push(c);
        }
    }
    let mut action = vec![vec![0usize; live.len()]; p.rank()];
    for (new_c, &c) in live.iter().enumerate() {
        for g in 0..p.rank() {
            let d = e
                .get(c, g as i32 + 1)
                .expect("closed table has no undefined entries");
            action[g][new_c] = map[d];
        }
    }
    let table = CosetTable::new(action)?;
    table.validate(p, subgroup_gens)?;
    Ok(table)
}
