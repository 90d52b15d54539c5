//! Wedge decompositions of curve complements with free or cyclic
//! fundamental group.

use super::TopologyError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WedgeMode {
    /// Fundamental group free of the given rank.
    Free { rank: u32 },
    /// Fundamental group cyclic of order d: `S^1 \cup_d e^2` plus spheres.
    Cyclic { order: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WedgeType {
    pub circles: u32,
    pub spheres: u32,
    /// `Some(d)` marks the cyclic case where the 1-skeleton is `S^1 cup_d
    /// e^2` rather than a wedge of circles.
    pub cyclic_order: Option<u32>,
}

/// Free case: `s = 2 + r - chi(D)` spheres next to `r` circles. Cyclic
/// case: `s = 2 - chi(D)` spheres next to `S^1 cup_d e^2`. A negative
/// sphere count means the curve data cannot have the assumed fundamental
/// group.
pub fn wedge_homotopy_type(mode: WedgeMode, chi_d: i64) -> Result<WedgeType, TopologyError> {
    match mode {
        WedgeMode::Free { rank } => {
            let s = 2 + rank as i64 - chi_d;
            if s < 0 {
                return Err(TopologyError::InconsistentInput(s));
            }
            Ok(WedgeType {
                circles: rank,
                spheres: s as u32,
                cyclic_order: None,
            })
        }
        WedgeMode::Cyclic { order } => {
            let s = 2 - chi_d;
            if s < 0 {
                return Err(TopologyError::InconsistentInput(s));
            }
            Ok(WedgeType {
                circles: if order == 1 { 0 } else { 1 },
                spheres: s as u32,
                cyclic_order: Some(order),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_complement_is_a_point() {
        // one line: r = 0, chi(D) = 2 -> no circles, no spheres
        let w = wedge_homotopy_type(WedgeMode::Free { rank: 0 }, 2).unwrap();
        assert_eq!((w.circles, w.spheres), (0, 0));
    }

    #[test]
    fn two_lines_give_a_circle() {
        // chi(two lines meeting once) = 2 + 2 - 1 = 3
        let w = wedge_homotopy_type(WedgeMode::Free { rank: 1 }, 3).unwrap();
        assert_eq!((w.circles, w.spheres), (1, 0));
    }

    #[test]
    fn smooth_conic_complement() {
        let w = wedge_homotopy_type(WedgeMode::Cyclic { order: 2 }, 2).unwrap();
        assert_eq!(w.spheres, 0);
        assert_eq!(w.cyclic_order, Some(2));
    }

    #[test]
    fn negative_sphere_count_is_inconsistent() {
        assert!(matches!(
            wedge_homotopy_type(WedgeMode::Free { rank: 0 }, 5),
            Err(TopologyError::InconsistentInput(-3))
        ));
    }

    #[test]
    fn sphere_counting() {
        // smooth quartic-like: higher chi(D) deficit adds spheres
        let w = wedge_homotopy_type(WedgeMode::Free { rank: 2 }, 1).unwrap();
        assert_eq!((w.circles, w.spheres), (2, 3));
    }
}
