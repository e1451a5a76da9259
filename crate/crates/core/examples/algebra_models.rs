//! Rotation, Clifford and graded tensor models with φ and γ.

use zn_graded::algebra::{ad_u_inv_v, check_graded_independence, AlgebraElement, AlgebraSpec, ModelDesc};
use zn_graded::root_of_unity;

fn main() {
    let q = root_of_unity(3, 1);
    let rot = AlgebraSpec::rotation(3, q.clone()).unwrap();
    let u = AlgebraElement::rot(&rot, 1, 0);
    let v = AlgebraElement::rot(&rot, 0, 1);
    println!("v·u = {}", &v * &u);
    let x = &(&u + &v).pow(3) + &AlgebraElement::one(&rot);
    println!("x = (u + v)^3 + 1 = {x}");
    println!("φ(x) = {}, γ(x) = {}", x.phi(), x.apply_grading());
    println!("Ad(u⁻¹v)(x) = γ(x): {}", ad_u_inv_v(&x).unwrap() == x.apply_grading());
    for r in 0..3 {
        println!("E_{r}(u + v^2) = {}", (&u + &v.pow(2)).projection(r));
    }

    let cl = AlgebraSpec::clifford(3, 3, q).unwrap();
    let e: Vec<_> = (1..=3).map(|i| AlgebraElement::generator(&cl, &format!("e{i}")).unwrap()).collect();
    println!("e2·e1 = {}, e1^3 = {}", &e[1] * &e[0], e[0].pow(3));
    let indep = check_graded_independence(&e[..1], &e[1..], 3).unwrap();
    println!("⟨e1⟩ and ⟨e2, e3⟩ graded independent to depth 3: {}", indep.is_none());

    let t = AlgebraSpec::graded_tensor(&rot, &cl).unwrap();
    let a = u.inject_left(&t).unwrap();
    let b = e[0].inject_right(&t).unwrap();
    println!("in the tensor product: b·a = {}, a·b = {}", &b * &a, &a * &b);
    println!("model file: {}", serde_json::to_string(&ModelDesc::describe(&t)).unwrap());
}
