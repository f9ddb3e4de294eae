//! Pointwise Kan extensions along the vertex inclusion `[0] → Δ₃^op`.

use setcat::kan::{verify_triangle_identities, Kan, LanAdjunction, RanAdjunction};
use setcat::setval::{FinSet, SetFunctor};
use setcat::sketch::{cat_sketch, vertex_inclusion};

fn main() {
    let k = vertex_inclusion();
    let kan = Kan::new(k.clone());
    let vertices = k.source().clone();
    for n in 0..4 {
        let t = SetFunctor::constant(&vertices, FinSet::new(n));
        let ran = kan.ran(&t);
        let lan = kan.lan(&t);
        println!("|T₀| = {n}: Ran sizes {:?}, Lan sizes {:?}, Ran is a category: {}", ran.sizes(), lan.sizes(), cat_sketch().is_model(&ran));
    }

    let t = SetFunctor::constant(&vertices, FinSet::new(2));
    let ran = kan.ran(&t);
    let counit = kan.counit_ran(&t);
    println!("counit at [0] for |T₀| = 2: {:?}", counit.component(0));
    let unit = kan.unit_ran(&ran);
    println!("unit at Ran T is iso: {}", unit.is_iso());

    let report = verify_triangle_identities(&RanAdjunction::new(k.clone()), std::slice::from_ref(&ran), std::slice::from_ref(&t));
    println!("Ran triangle identities: {} checks, passed {}", report.checked, report.passed());
    let report = verify_triangle_identities(&LanAdjunction::new(k), &[t], &[ran]);
    println!("Lan triangle identities: {} checks, passed {}", report.checked, report.passed());
}
