//! The reflection induced by `Δ ⊣ Colim` on `Set^2`, and a map in `E_I`
//! whose pullback leaves it.

use setcat::fixtures::colimit_example;
use setcat::kan::LanAdjunction;
use setcat::limits::pullback_nat;
use setcat::reflect::{EPrimeVerdict, InducedReflection};

fn main() {
    let ex = colimit_example();
    let r = InducedReflection::new(LanAdjunction::colim(ex.m.shape()));

    let reflected = r.reflect_object(&ex.m);
    println!("θ_M components: {:?}", reflected.theta.components());
    println!("I(M) sizes: {:?}, M in Mono(Colim): {}", reflected.image.sizes(), r.in_subcategory(&ex.m));

    println!("φ mono {}, epi {}", ex.phi.is_mono(), ex.phi.is_epi());
    println!("φ ∈ E_I: {}, φ ∈ M_I: {}", r.is_in_e_i(&ex.phi), r.is_in_m_i(&ex.phi));

    let pb = pullback_nat(&ex.phi, &ex.psi);
    println!("pullback object sizes {:?}", pb.object.sizes());
    println!("ψ*(φ) ∈ E_I: {}", r.is_in_e_i(&pb.second));

    match r.is_in_e_prime_falsify(&ex.phi, std::slice::from_ref(&ex.psi)).expect("shapes agree") {
        EPrimeVerdict::Counterexample { probe, .. } => println!("E′ refuted by probe {probe}"),
        EPrimeVerdict::Pass { probes } => println!("no refutation among {probes} probes"),
    }

    let fact = r.reflective_factorization(&ex.phi).expect("a factorization");
    println!("reflective factorization through {:?}", fact.middle.sizes());
}
