//! Classical cases: Segre and Plücker embeddings, symmetric products of a
//! curve, Brill-Noether loci and odd Chern class identities.

use degloci::worked::{macdonald_coefficients, run_all_examples, segre_check};

fn main() {
    let segre = segre_check(2, 3, 4).unwrap();
    print!("{}", segre.to_text());

    println!("Betti numbers of C^(3), g=4: {:?}", macdonald_coefficients(4, 3, 6));

    let mut all_ok = true;
    for rep in run_all_examples().unwrap() {
        println!("{:<18} {:<52} {}", rep.name, rep.parameters.to_string(), if rep.matches { "match" } else { "MISMATCH" });
        all_ok &= rep.matches;
    }
    std::process::exit(if all_ok { 0 } else { 3 });
}
