//! Bounded and strict partitions, and the doubling bijection that pairs a
//! strict partition with a box partition.

use degloci::partitions::{
    box_partition_counts, enumerate_box_partitions, enumerate_strict_partitions, merge_doubled, split_doubled,
    verify_doubling_bijection, BoxConstraint, Partition,
};

fn main() {
    let bx = BoxConstraint::new(3, 2);
    println!("partitions of 4 in a 2x3 box:");
    for p in enumerate_box_partitions(4, bx) {
        println!("  {p}  (conjugate {})", p.conjugate());
    }

    let counts = box_partition_counts(bx, 6);
    println!("box counts by weight: {:?}", counts.iter().map(|c| c.to_string()).collect::<Vec<_>>());

    println!("strict partitions of 6 with parts <= 4:");
    for mu in enumerate_strict_partitions(6, 4) {
        println!("  {mu}");
    }

    let nu = Partition::new(vec![5, 3, 3, 2, 2, 1]).unwrap();
    let (mu, lambda) = split_doubled(&nu);
    println!("{nu} splits into strict {mu} and doubled {lambda}");
    assert_eq!(merge_doubled(&lambda, &mu), nu);

    let report = verify_doubling_bijection(20, 4);
    println!("doubling identity up to q=20, parts <= 4: {}", if report.passed { "ok" } else { "FAILED" });
}
