use serde::Serialize;

use crate::error::{Error, Result};
use crate::numerics::BallGrid;
use crate::report::sig17;

/// Point charge `q` at distance `d` from the centre on the `+z` axis.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ExternalCharge {
    #[serde(serialize_with = "sig17")]
    pub q: f64,
    #[serde(serialize_with = "sig17")]
    pub d: f64,
}

impl ExternalCharge {
    /// `q / |x − d ẑ|`.
    pub fn potential_at(&self, r: f64, theta: f64) -> f64 {
        self.q / (r * r + self.d * self.d - 2.0 * r * self.d * theta.cos()).sqrt()
    }
}

/// Coulomb potential of the charge at every node of `grid`. The charge must
/// sit outside the ball so the potential is smooth inside it.
pub fn external_potential(charge: &ExternalCharge, grid: &BallGrid) -> Result<Vec<f64>> {
    if !(charge.d > grid.radius()) {
        return Err(Error::InvalidConfiguration(format!(
            "external charge at d = {} must lie outside the ball of radius {}",
            charge.d,
            grid.radius()
        )));
    }
    Ok(grid.sample_real(|r, theta, _| charge.potential_at(r, theta)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::Resolution;
    use proptest::prelude::*;
    use std::f64::consts::PI;

    #[test]
    fn closed_form_values() {
        let c = ExternalCharge { q: 1.0, d: 2.0 };
        for theta in [0.0, 1.0, PI] {
            assert_eq!(c.potential_at(0.0, theta), 0.5);
        }
        assert!((c.potential_at(0.5, 0.0) - 2.0 / 3.0).abs() < 1e-15);
        let eq = c.potential_at(0.7, PI / 2.0);
        assert!((eq - 1.0 / (0.49f64 + 4.0).sqrt()).abs() < 1e-15);
    }

    #[test]
    fn charge_inside_ball_rejected() {
        let g = BallGrid::new(
            1.0,
            Resolution {
                panels: 1,
                order: 2,
                n_theta: 2,
                n_phi: 1,
            },
        )
        .unwrap();
        for d in [0.5, 1.0] {
            let c = ExternalCharge { q: 1.0, d };
            assert!(matches!(
                external_potential(&c, &g),
                Err(Error::InvalidConfiguration(_))
            ));
        }
        assert_eq!(
            external_potential(&ExternalCharge { q: 1.0, d: 1.5 }, &g)
                .unwrap()
                .len(),
            g.len()
        );
    }

    proptest! {
        #[test]
        fn near_side_sees_larger_potential(
            r in 0.01..1.0f64, theta in 0.0..(PI / 2.0 - 1e-3), d in 1.01..50.0f64, q in 0.1..5.0f64,
        ) {
            let c = ExternalCharge { q, d };
            prop_assert!(c.potential_at(r, theta) > c.potential_at(r, PI - theta));
        }
    }
}
