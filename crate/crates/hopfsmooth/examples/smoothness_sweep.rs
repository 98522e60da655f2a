//! Sweep a Z-defined group scheme across characteristics and watch where
//! smoothness fails: mu_6 is non-smooth exactly at the primes dividing 6.
//!
//! Run with: cargo run --example smoothness_sweep

use hopfsmooth::field::{is_prime_u64, FieldSpec};
use hopfsmooth::hopf::{base_change_quadruple, catalog, is_smooth};

fn main() -> hopfsmooth::Result<()> {
    let mu6 = catalog::roots_of_unity(6, FieldSpec::Rationals);
    let mut nonsmooth = Vec::new();
    println!("  p | group dim | lie dim | smooth");
    for p in (2u64..=31).filter(|&p| is_prime_u64(p)) {
        let hp = base_change_quadruple(&mu6, p)?;
        let rep = is_smooth(&hp)?;
        println!(
            "{:>3} | {:>9} | {:>7} | {}",
            p, rep.group_dim, rep.lie_dim, rep.smooth
        );
        if !rep.smooth {
            nonsmooth.push(p);
        }
    }
    let rep0 = is_smooth(&mu6)?;
    println!("  Q | {:>9} | {:>7} | {}", rep0.group_dim, rep0.lie_dim, rep0.smooth);
    println!("non-smooth primes: {:?}", nonsmooth);
    Ok(())
}
