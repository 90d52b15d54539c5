//! The poset layer of threshold sets of atypical values: given a total
//! membership table over subsets of the ground set, validate upward closure
//! and list the inclusion-minimal members.

use super::TopologyError;

/// Ground set of named atypical values plus a total membership table for the
/// upward-closed family, indexed by subset bitmask.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThresholdInstance {
    values: Vec<String>,
    table: Vec<bool>,
}

impl ThresholdInstance {
    pub fn new(values: Vec<String>, table: Vec<bool>) -> Result<Self, TopologyError> {
        if values.len() > 12 {
            return Err(TopologyError::GroundSetTooLarge(values.len()));
        }
        let expected = 1usize << values.len();
        if table.len() != expected {
            return Err(TopologyError::BadTableSize {
                expected,
                found: table.len(),
            });
        }
        Ok(ThresholdInstance { values, table })
    }

    pub fn values(&self) -> &[String] {
        &self.values
    }

    pub fn contains(&self, mask: usize) -> bool {
        self.table[mask]
    }

    pub fn set_string(&self, mask: usize) -> String {
        if mask == 0 {
            return "{}".to_string();
        }
        let names: Vec<&str> = (0..self.values.len())
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| self.values[i].as_str())
            .collect();
        format!("{{{}}}", names.join(", "))
    }
}

/// All inclusion-minimal members, sorted by size then bitmask, after
/// validating that the family is upward closed (adding one element to a
/// member must give a member).
pub fn threshold_minimal_sets(
    inst: &ThresholdInstance,
) -> Result<Vec<usize>, TopologyError> {
    let n = inst.values().len();
    for mask in 0..(1usize << n) {
        if !inst.contains(mask) {
            continue;
        }
        for b in 0..n {
            let sup = mask | (1 << b);
            if sup != mask && !inst.contains(sup) {
                return Err(TopologyError::MonotonicityViolation {
                    set: inst.set_string(mask),
                    superset: inst.set_string(sup),
                });
            }
        }
    }
    let mut minimal: Vec<usize> = (0..(1usize << n))
        .filter(|&mask| {
            inst.contains(mask)
                && (0..n).all(|b| {
                    let sub = mask & !(1 << b);
                    sub == mask || !inst.contains(sub)
                })
        })
        .collect();
    minimal.sort_by_key(|&m| (m.count_ones(), m));
    Ok(minimal)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("v{i}")).collect()
    }

    #[test]
    fn all_subsets_has_empty_minimal() {
        let inst = ThresholdInstance::new(names(3), vec![true; 8]).unwrap();
        assert_eq!(threshold_minimal_sets(&inst).unwrap(), vec![0]);
    }

    #[test]
    fn only_full_set() {
        let mut table = vec![false; 8];
        table[7] = true;
        let inst = ThresholdInstance::new(names(3), table).unwrap();
        assert_eq!(threshold_minimal_sets(&inst).unwrap(), vec![7]);
    }

    #[test]
    fn upward_closure_violation_detected() {
        let mut table = vec![false; 4];
        table[0b01] = true; // {v0} in, {v0,v1} out
        let inst = ThresholdInstance::new(names(2), table).unwrap();
        assert!(matches!(
            threshold_minimal_sets(&inst),
            Err(TopologyError::MonotonicityViolation { .. })
        ));
    }

    #[test]
    #[allow(clippy::manual_contains)] // the predicate is subset-of, not membership
    fn minimal_sets_form_an_antichain_generating_the_family() {
        // family generated by {0,1} and {2}
        let n = 3;
        let gens = [0b011usize, 0b100];
        let table: Vec<bool> = (0..8)
            .map(|m| gens.iter().any(|g| m & g == *g))
            .collect();
        let inst = ThresholdInstance::new(names(n), table).unwrap();
        let minimal = threshold_minimal_sets(&inst).unwrap();
        assert_eq!(minimal, vec![0b100, 0b011]);
        // antichain
        for &a in &minimal {
            for &b in &minimal {
                assert!(a == b || (a & b != a && a & b != b));
            }
        }
        let _ = &minimal;
        // every member contains a minimal set
        for m in 0..8usize {
            if inst.contains(m) {
                assert!(minimal.iter().any(|&g| m & g == g));
            }
        }
    }

    #[test]
    fn table_size_checked() {
        assert!(ThresholdInstance::new(names(2), vec![true; 3]).is_err());
        assert!(ThresholdInstance::new(names(13), vec![]).is_err());
    }
}
