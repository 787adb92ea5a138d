//! Numerical semigroups: membership certificates, Frobenius numbers, gaps
//! and Apéry sets, plus the closed form D_{2,k}.
//!
//! ```bash
//! cargo run --example semigroup_arithmetic
//! ```

use configurable::{d2k, GeneratedMonoid, NumericalSemigroup};

fn main() -> configurable::Result<()> {
    let s = NumericalSemigroup::from_generators(&[2, 3])?;
    println!("<2,3>: frobenius {}, gaps {:?}, apery(2) {:?}", s.frobenius(), s.gaps(), s.apery_set(2)?);
    let s = NumericalSemigroup::from_generators(&[7, 22])?;
    println!("<7,22>: 29 = {:?}·(7,22), 30 member: {}", s.contains(29), s.is_member(30));
    println!("{}", serde_json::to_string(&NumericalSemigroup::from_generators(&[3, 4, 5])?.summary())?);
    for k in 2..=8 {
        let s = d2k(k)?;
        println!("D_2,{k} = <{:?}>, frobenius {}", s.minimal_generators(), s.frobenius());
    }
    match NumericalSemigroup::from_generators(&[4, 6]) {
        Err(e) => println!("{{4,6}}: {e}"),
        Ok(_) => unreachable!(),
    }
    let m = GeneratedMonoid::new(&[4, 6])?;
    println!("relaxed <4,6>: 10 member {}, 11 member {}", m.is_member(10), m.is_member(11));
    Ok(())
}
