//! Betti numbers of degeneracy loci in the range where they are determined
//! by the ambient variety.

use degloci::degeneracy::{
    betti_degeneracy, betti_orthogonal_special, betti_skew, fibration_betti, skew_to_orthogonal, AmbientData,
    Fiber, Parity,
};
use degloci::table::BettiTable;

fn show(label: &str, t: &BettiTable) {
    println!("{label}");
    print!("{}", t.to_csv());
}

fn main() {
    let p12 = AmbientData::projective_space(12);
    show("general e=4 f=5 r=2 on P^12", &betti_degeneracy(&p12, 4, 5, 2).unwrap());
    show("skew e=6 r=2 on P^12", &betti_skew(&p12, 6, 2).unwrap());
    show("Grassmann fibration G(2,4) over P^3", &fibration_betti(&AmbientData::projective_space(3), Fiber::Grassmann { d: 2, e: 4 }).unwrap());

    let jac = AmbientData::jacobian(14);
    show("orthogonal, even case, over a Jacobian of genus 14", &betti_orthogonal_special(&jac, Parity::Even).unwrap());

    let s = skew_to_orthogonal(7, 2).unwrap();
    println!("{}", serde_json::to_string(&s).unwrap());
}
