//! The graded r-transform is additive on graded independent pairs.

use zn_graded::algebra::{verify_linearization, verify_power_rule, AlgebraElement, AlgebraSpec};
use zn_graded::root_of_unity;

fn main() {
    for n in 2..=4u64 {
        let cl = AlgebraSpec::clifford(2, n, root_of_unity(n, 1)).unwrap();
        let e1 = AlgebraElement::generator(&cl, "e1").unwrap();
        let e2 = AlgebraElement::generator(&cl, "e2").unwrap();
        let rep = verify_linearization(&e1, &e2, 12).unwrap();
        println!(
            "n = {n}: r[e1] has support {:?}, r[e1 + e2] = r[e1] + r[e2]: {}",
            rep.r_a.support(),
            rep.holds()
        );
    }

    // (a + b)^{n'} = a^{n'} + b^{n'} needs q^{r²} to have order n'; at
    // n = 4, r = 2 it does not.
    for (n, r) in [(3, 1), (6, 2), (4, 2)] {
        let rot = AlgebraSpec::rotation(n, root_of_unity(n, 1)).unwrap();
        let a = AlgebraElement::rot(&rot, r, 0);
        let b = AlgebraElement::rot(&rot, 0, r);
        let rep = verify_power_rule(&a, &b).unwrap();
        println!(
            "n = {n}, r = {r}: (u^{r} + v^{r})^{} = {}{}",
            rep.exponent,
            rep.lhs,
            if rep.holds() { "" } else { "  (cross terms survive)" }
        );
    }
}
