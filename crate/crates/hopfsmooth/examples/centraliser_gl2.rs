//! Centralisers of a point of the plane under GL2: the natural action gives
//! a smooth two-dimensional stabiliser, while the Frobenius-twisted action
//! has a tangent space that is strictly too big in every characteristic.
//!
//! Run with: cargo run --example centraliser_gl2

use hopfsmooth::centraliser::{
    centraliser_quadruple, gl2_frobenius_twist_action, gl2_natural_action, CentraliserOptions,
    PointList,
};
use hopfsmooth::field::FieldSpec;

fn main() -> hopfsmooth::Result<()> {
    let q = FieldSpec::Rationals;
    let spec = gl2_natural_action(q.clone())?;
    let points = PointList::new(vec![vec![q.from_i64(1), q.from_i64(0)]]);
    let out = centraliser_quadruple(&spec, &points, CentraliserOptions::default())?;
    println!(
        "natural action over Q: dim {} lie {} smooth {}",
        out.report.group_dim, out.report.lie_dim, out.report.smooth
    );
    println!("  relations: {:?}", out
        .quadruple
        .relations()
        .iter()
        .map(|g| g.to_text())
        .collect::<Vec<_>>());

    for p in [2u64, 3] {
        let f = FieldSpec::prime_field(p)?;
        let spec = gl2_frobenius_twist_action(p)?;
        let points = PointList::new(vec![vec![f.from_i64(1), f.from_i64(0)]]);
        let out = centraliser_quadruple(&spec, &points, CentraliserOptions::default())?;
        println!(
            "frobenius twist at p = {}: dim {} lie {} smooth {} (bound {})",
            p, out.report.group_dim, out.report.lie_dim, out.report.smooth, out.realized_bound
        );
    }
    Ok(())
}
