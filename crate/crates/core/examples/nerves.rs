//! Categories as models of a sketch on `Δ₃^op`, and the preorder
//! reflection computed through nerves.

use setcat::fincat::{parallel_pair, split_idempotent, two};
use setcat::sketch::{cat_from_model, cat_sketch, nerve3, preorder_reflection, vertex_reflection};

fn main() {
    let sketch = cat_sketch();
    let r = vertex_reflection();
    for (name, c) in [("2", two()), ("parallel pair", parallel_pair()), ("split idempotent", split_idempotent())] {
        let n = nerve3(&c);
        let back = cat_from_model(&n).expect("a nerve is a model");
        println!(
            "{name}: nerve sizes {:?}, model {}, recovered {} morphisms, unit mono {}",
            n.sizes(),
            sketch.is_model(&n),
            back.morphism_count(),
            r.in_subcategory(&n)
        );
        let p = preorder_reflection(&c).expect("pipeline agrees with the hom oracle");
        println!("  reflected preorder: {:?}", p.pairs());
    }
}
