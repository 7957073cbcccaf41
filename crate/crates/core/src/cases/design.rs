//! The three constrained engineering design problems: tension/compression
//! spring, pressure vessel and speed reducer.

use crate::problem::{GridSpec, ObjectiveProblem};
use crate::scalar::Scalar;

/// Spring design: minimise `(2 + N) r^2 d` over wire diameter `r`, coil
/// diameter `d` and turn count `N`, under the four classic constraints.
pub fn spring_problem<R: Scalar>() -> ObjectiveProblem<R> {
    let c = R::of;
    let mut p = ObjectiveProblem::unconstrained(
        "spring",
        vec![c(0.05), c(0.25), c(2.0)],
        vec![c(2.0), c(1.3), c(15.0)],
        move |x: &[R]| (R::of(2.0) + x[2]) * x[0] * x[0] * x[1],
    );
    p.constraints = vec![
        Box::new(move |x: &[R]| {
            R::one() - x[2] * x[1].powi(3) / (R::of(71785.0) * x[0].powi(4))
        }),
        Box::new(move |x: &[R]| {
            x[1] * (R::of(4.0) * x[1] - x[0])
                / (R::of(12566.0) * x[0].powi(3) * (x[1] - x[0]))
                + R::one() / (R::of(5108.0) * x[0] * x[0])
                - R::one()
        }),
        Box::new(move |x: &[R]| {
            R::one() - R::of(140.45) * x[0] / (x[1] * x[1] * x[2])
        }),
        Box::new(move |x: &[R]| (x[1] + x[0]) - R::of(1.5)),
    ];
    p
}

/// Pressure vessel design over `(d1, d2, r, W)`: head/body thicknesses on
/// the 0.0625-inch grid, inner radius and cylinder length continuous.
///
/// The objective uses 0.6224 and 19.84 for the first and third coefficients;
/// the volume constraint is `4/3 pi r^3 + pi r^2 W >= 1,296,000`.
pub fn pressure_vessel_problem<R: Scalar>() -> ObjectiveProblem<R> {
    let c = R::of;
    let mut p = ObjectiveProblem::unconstrained(
        "pressure_vessel",
        vec![c(0.0625), c(0.0625), c(10.0), c(10.0)],
        vec![c(6.1875), c(6.1875), c(200.0), c(200.0)],
        move |x: &[R]| {
            let (d1, d2, r, w) = (x[0], x[1], x[2], x[3]);
            R::of(0.6224) * r * w * d1
                + R::of(1.7781) * r * r * d2
                + R::of(19.84) * r * d1 * d1
                + R::of(3.1661) * w * d1 * d1
        },
    );
    p.constraints = vec![
        Box::new(move |x: &[R]| -x[0] + R::of(0.0193) * x[2]),
        Box::new(move |x: &[R]| -x[1] + R::of(0.00954) * x[2]),
        Box::new(move |x: &[R]| {
            let r = x[2];
            let w = x[3];
            let pi = R::of(std::f64::consts::PI);
            -(R::of(4.0) / R::of(3.0)) * pi * r.powi(3) - pi * r * r * w + R::of(1_296_000.0)
        }),
        Box::new(move |x: &[R]| x[3] - R::of(240.0)),
    ];
    p.integer_dims = vec![
        GridSpec { dim: 0, step: c(0.0625), origin: c(0.0625) },
        GridSpec { dim: 1, step: c(0.0625), origin: c(0.0625) },
    ];
    p
}

/// Speed reducer design: seven variables, `x3` (tooth count) integer,
/// eleven constraints.
pub fn speed_reducer_problem<R: Scalar>() -> ObjectiveProblem<R> {
    let c = R::of;
    let mut p = ObjectiveProblem::unconstrained(
        "speed_reducer",
        vec![c(2.6), c(0.7), c(17.0), c(7.3), c(7.8), c(2.9), c(5.0)],
        vec![c(3.6), c(0.8), c(28.0), c(8.3), c(8.4), c(3.9), c(5.5)],
        move |x: &[R]| {
            let (x1, x2, x3) = (x[0], x[1], x[2]);
            let (x4, x5, x6, x7) = (x[3], x[4], x[5], x[6]);
            R::of(0.7854)
                * (x1 * x2 * x2 * (R::of(3.3333) * x3 * x3 + R::of(14.9334) * x3 - R::of(43.0934))
                    + (x4 * x6 * x6 + x5 * x7 * x7))
                - R::of(1.508) * x1 * (x6 * x6 + x7 * x7)
                + R::of(7.4777) * (x6.powi(3) + x7.powi(3))
        },
    );
    p.constraints = vec![
        Box::new(move |x: &[R]| R::of(27.0) / (x[0] * x[1] * x[1] * x[2]) - R::one()),
        Box::new(move |x: &[R]| {
            R::of(397.5) / (x[0] * x[1] * x[1] * x[2] * x[2]) - R::one()
        }),
        Box::new(move |x: &[R]| {
            R::of(1.93) * x[3].powi(3) / (x[1] * x[2] * x[5].powi(4)) - R::one()
        }),
        Box::new(move |x: &[R]| {
            R::of(1.93) * x[4].powi(3) / (x[1] * x[2] * x[6].powi(4)) - R::one()
        }),
        Box::new(move |x: &[R]| {
            let t = R::of(745.0) * x[3] / (x[1] * x[2]);
            (t * t + R::of(16.9e6)).sqrt() / (R::of(110.0) * x[5].powi(3)) - R::one()
        }),
        Box::new(move |x: &[R]| {
            let t = R::of(745.0) * x[4] / (x[1] * x[2]);
            (t * t + R::of(157.5e6)).sqrt() / (R::of(85.0) * x[6].powi(3)) - R::one()
        }),
        Box::new(move |x: &[R]| x[1] * x[2] - R::of(40.0)),
        Box::new(move |x: &[R]| R::of(5.0) * x[1] - x[0]),
        Box::new(move |x: &[R]| x[0] - R::of(12.0) * x[1]),
        Box::new(move |x: &[R]| (R::of(1.5) * x[5] + R::of(1.9)) - x[3]),
        Box::new(move |x: &[R]| (R::of(1.1) * x[6] + R::of(1.9)) - x[4]),
    ];
    p.integer_dims = vec![GridSpec { dim: 2, step: c(1.0), origin: c(17.0) }];
    p
}
