//! Fixed inputs for the kernel benchmarks.

use codegree_core::{Case, ChowModel, Partition};

pub fn grassmannian(k: usize, n: usize) -> ChowModel {
    format!("G({k},{n})").parse().expect("valid Grassmannian")
}

/// The skew shape (n, n-1, ..., 1) / (n/2, ..., 1).
pub fn staircase_skew(n: u32) -> (Partition, Partition) {
    let outer = Partition::new((1..=n).rev().collect()).expect("partition");
    let inner = Partition::new((1..=n / 2).rev().collect()).expect("partition");
    (inner, outer)
}

pub fn case(tag: &str) -> Case {
    tag.parse().expect("valid case tag")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_parse() {
        assert_eq!(grassmannian(4, 8).to_string(), "G(4,8)");
        let (mu, nu) = staircase_skew(6);
        assert!(mu.weight() < nu.weight());
        assert_eq!(case("sl:outer-sym:4").n(), 4);
    }
}
