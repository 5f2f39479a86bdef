//! Prints the standards coverage catalog as a checkmark grid, then answers
//! a lookup in each direction.
//!
//! ```text
//! cargo run --example standards_catalog
//! ```

use haratara::catalog::{limitations_for, standards_for, STANDARDS};
use haratara::model::{Limitation, Literal};

fn main() {
    print!("{:<18} {:>4}", "standard", "year");
    for l in Limitation::ALL {
        print!("  {}", l.code());
    }
    println!();
    for s in &STANDARDS {
        print!("{:<18} {:>4}", s.id, s.year);
        for &l in Limitation::ALL {
            print!("  {}", if s.covers(l) { 'x' } else { '.' });
        }
        println!();
    }

    println!();
    let ids: Vec<&str> = standards_for(Limitation::Efficiency).iter().map(|s| s.id).collect();
    println!("efficiency is addressed by: {}", ids.join(", "));
    match limitations_for("ISO 26262") {
        Ok(set) if set.is_empty() => println!("ISO 26262 addresses none of the limitations"),
        Ok(set) => println!("ISO 26262 addresses {set:?}"),
        Err(e) => println!("{e}"),
    }
    if let Err(e) = limitations_for("ISO 9001") {
        println!("{}", e.to_diagnostic());
    }
}
