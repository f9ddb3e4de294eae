//! Building, validating and inspecting finite categories.

use serde_json::json;
use setcat::fincat::{opposite, parallel_pair, split_idempotent, two};
use setcat::json::parse_category;

fn main() {
    let arrow = json!({
        "objects": ["a", "b"],
        "morphisms": [{"id": "1a", "dom": "a", "cod": "a"}, {"id": "f", "dom": "a", "cod": "b"}, {"id": "1b", "dom": "b", "cod": "b"}],
        "identities": {"a": "1a", "b": "1b"},
        "compose": [["1a", "1a", "1a"], ["f", "1a", "f"], ["1b", "f", "f"], ["1b", "1b", "1b"]]
    });
    let c = parse_category(&arrow, "").expect("a valid table");
    println!("{c}");
    println!("preorder: {}, pseudo-filtered: {}", c.is_preorder(), c.is_pseudo_filtered());

    let mut broken = arrow.clone();
    broken["compose"].as_array_mut().unwrap().pop();
    println!("without 1b∘1b: {}", parse_category(&broken, "").unwrap_err());

    for (name, c) in [("2", two()), ("parallel pair", parallel_pair()), ("split idempotent", split_idempotent())] {
        let op = opposite(&c);
        println!(
            "{name}: {} objects, {} morphisms, pseudo-filtered {}, opposite pseudo-filtered {}",
            c.object_count(),
            c.morphism_count(),
            c.is_pseudo_filtered(),
            op.is_pseudo_filtered()
        );
    }
}
