use serde::Serialize;

use super::{low_mask, Graph, VertexSet};

/// An induced `K_{1,3}`: `center` adjacent to three pairwise non-adjacent leaves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Claw {
    pub center: usize,
    pub leaves: [usize; 3],
}

impl Graph {
    /// First induced claw by center, then lexicographic leaves.
    pub fn find_claw(&self) -> Option<Claw> {
        for center in 0..self.n {
            let nb = self.row(center);
            for a in VertexSet::from_bits(nb).iter() {
                let after_a = nb & !low_mask(a + 1) & !self.row(a);
                for b in VertexSet::from_bits(after_a).iter() {
                    let after_b = after_a & !low_mask(b + 1) & !self.row(b);
                    if let Some(c) = VertexSet::from_bits(after_b).first() {
                        return Some(Claw {
                            center,
                            leaves: [a, b, c],
                        });
                    }
                }
            }
        }
        None
    }

    pub fn is_claw_free(&self) -> bool {
        self.find_claw().is_none()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use proptest::prelude::*;

    fn brute_force_has_claw(g: &Graph) -> bool {
        let n = g.order();
        (0..n).any(|c| {
            (0..n).any(|a| {
                (a + 1..n).any(|b| {
                    (b + 1..n).any(|d| {
                        [a, b, d].iter().all(|&x| x != c && g.has_edge(c, x))
                            && !g.has_edge(a, b)
                            && !g.has_edge(a, d)
                            && !g.has_edge(b, d)
                    })
                })
            })
        })
    }

    #[test]
    fn claw_examples() {
        assert_eq!(
            star(3).find_claw(),
            Some(Claw {
                center: 0,
                leaves: [1, 2, 3]
            })
        );
        assert_eq!(cycle(6).find_claw(), None);
        let p = petersen();
        let claw = p.find_claw().expect("Petersen has a claw");
        assert!(claw.leaves.iter().all(|&l| p.has_edge(claw.center, l)));
        assert!(brute_force_has_claw(&p));
        assert!(complete(5).is_claw_free());
    }

    proptest! {
        #[test]
        fn agrees_with_brute_force(n in 0usize..=10, seed in any::<u64>()) {
            let g = crate::testutil::random_graph(n, 0.5, seed);
            prop_assert_eq!(g.find_claw().is_some(), brute_force_has_claw(&g));
            if let Some(c) = g.find_claw() {
                let [a, b, d] = c.leaves;
                prop_assert!(g.has_edge(c.center, a) && g.has_edge(c.center, b) && g.has_edge(c.center, d));
                prop_assert!(!g.has_edge(a, b) && !g.has_edge(a, d) && !g.has_edge(b, d));
            }
        }
    }
}
