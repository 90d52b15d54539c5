//! Permutations of `{0..n-1}` in one-line notation.
//!
//! Composition is left-to-right: `(p * q)(i) = q(p(i))`, so evaluating a word
//! letter by letter is a homomorphism.

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return None;
            }
            seen[i] = true;
        }
        Some(Perm(images))
    }

    /// Build from 1-based disjoint cycles, e.g. `&[vec![1,2], vec![3,4]]`.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Option<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        for cycle in cycles {
            for w in cycle.windows(2) {
                let (a, b) = (w[0], w[1]);
                if a == 0 || b == 0 || a > n || b > n {
                    return None;
                }
                images[a - 1] = b - 1;
            }
            if cycle.len() > 1 {
                let (first, last) = (cycle[0], *cycle.last().unwrap());
                images[last - 1] = first - 1;
            }
        }
        Perm::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `(self * rhs)(i) = rhs(self(i))`
    pub fn compose(&self, rhs: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), rhs.degree());
        Perm(self.0.iter().map(|&i| rhs.0[i]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut out = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            out[v] = i;
        }
        Perm(out)
    }

    /// 1-based disjoint-cycle notation; the identity renders as `id`.
    pub fn cycle_string(&self) -> String {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut out = String::new();
        for start in 0..n {
            if seen[start] || self.0[start] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut cur = self.0[start];
            while cur != start {
                seen[cur] = true;
                cycle.push(cur);
                cur = self.0[cur];
            }
            out.push('(');
            out.push_str(
                &cycle
                    .iter()
                    .map(|i| (i + 1).to_string())
                    .collect::<Vec<_>>()
                    .join(","),
            );
            out.push(')');
        }
        if out.is_empty() {
            "id".to_string()
        } else {
            out
        }
    }

    /// Cycle type as a partition of n, descending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut lens = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                len += 1;
                cur = self.0[cur];
            }
            lens.push(len);
        }
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    /// All permutations of degree n in lexicographic one-line order.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut current: Vec<usize> = (0..n).collect();
        loop {
            out.push(Perm(current.clone()));
            // next lexicographic permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| current[i] < current[i + 1])
            else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| current[j] > current[i]).unwrap();
            current.swap(i, j);
            current[i + 1..].reverse();
        }
        out
    }
}

impl std::fmt::Display for Perm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.cycle_string())
    }
}
