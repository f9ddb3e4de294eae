//! Image factorizations in `Set^J` and diagonal fillers of commutative
//! squares.

use setcat::gen::Gen;
use setcat::setval::{check_orthogonal, factorize, Diagonal};

fn main() {
    let mut gen = Gen::new(5);
    let shape = gen.shape(3);
    println!("shape:\n{shape}");

    let f = gen.morphism(&shape, 3);
    let fact = factorize(&f);
    println!("f: {:?} → {:?}, image {:?}", f.source().sizes(), f.target().sizes(), fact.mid.sizes());

    let square = gen.epi_mono_square(&shape, 2);
    match check_orthogonal(&square.e, &square.m, &square.u, &square.v).expect("a commutative square") {
        Diagonal::Unique(d) => println!("epi/mono square: unique diagonal {:?}", d.components()),
        other => println!("epi/mono square: {other:?}"),
    }

    let crafted = gen.crafted_square(&shape, 2);
    match check_orthogonal(&crafted.e, &crafted.m, &crafted.u, &crafted.v).expect("a commutative square") {
        Diagonal::Unique(_) => println!("crafted square unexpectedly has a unique diagonal"),
        Diagonal::Missing { object, element } => println!("crafted square: no diagonal, stuck at {object:?}/{element:?}"),
        Diagonal::Multiple(a, b) => println!("crafted square: two diagonals {:?} and {:?}", a.components(), b.components()),
    }
}
