//! An EDT0L language whose growth is the partition function.

use grouplang::catalog::intermediate_growth_system;
use grouplang::growth::{growth_of_system, intermediate_growth_report, partition_counts};
use grouplang::lsystem::SearchCaps;

fn main() {
    let max = 25;
    let f = growth_of_system(&intermediate_growth_system(), "intermediate-growth", max, SearchCaps::default())
        .expect("exhaustive");
    let p = partition_counts(max);
    println!(" n   f(n)   p(n)");
    for n in 1..=max {
        println!("{n:>2} {:>6} {:>6}", f.get(n), p[n]);
    }
    let r = intermediate_growth_report(&f, 2.0, 1.6);
    println!("n^2 < f(n) on {:?}", r.lower);
    println!("f(n) < 1.6^n on {:?}", r.upper);
    let last = r.ratios.last().unwrap();
    println!("f({})/f({}) = {:.4}", last.0 + 1, last.0, last.1);
}
