//! The reflection induced by an adjunction: factor each unit component as a
//! componentwise surjection followed by a componentwise injection, and take
//! the middle object.

use thiserror::Error;

use crate::kan::Adjunction;
use crate::limits::{is_pullback_square, pullback_nat};
use crate::setval::{check_orthogonal, coproduct, factorize, representable, subfunctors, yoneda, Coproduct, Diagonal, NatTrans, SetFunctor};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReflectError {
    #[error("the morphism is not in E_I")]
    NotInEI,
    #[error("the cover is not an epimorphism")]
    CoverNotEpi,
    #[error("the domain of the cover is not in the reflective subcategory")]
    CoverDomainNotInSubcategory,
    #[error("the cover does not land in the codomain of the morphism")]
    CoverMismatch,
    #[error("reflective factorization failed verification: {0}")]
    VerificationFailed(String),
}

/// `θ_C = μ_C ∘ η_C` with `I(C)` the image of `θ_C`.
#[derive(Debug, Clone)]
pub struct Reflected {
    pub theta: NatTrans,
    pub image: SetFunctor,
    pub eta: NatTrans,
    pub mu: NatTrans,
}

/// The reflection onto the objects whose unit is mono.
#[derive(Debug, Clone)]
pub struct InducedReflection<A> {
    pub adjunction: A,
}

/// `f = m ∘ e` with `e ∈ E_I`, `m ∈ M_I`.
#[derive(Debug, Clone)]
pub struct ReflectiveFactorization {
    pub e: NatTrans,
    pub middle: SetFunctor,
    pub m: NatTrans,
}

/// Data of one stable-units check along `g: A → I(C)`.
#[derive(Debug, Clone)]
pub struct StableUnitsInstance {
    /// `g*(η_C): A ×_{I(C)} C → A`.
    pub pulled_back: NatTrans,
    /// `I(g*(η_C))` is an isomorphism.
    pub stable: bool,
    /// `GF` sends the pullback square to a pullback square.
    pub condition_a: bool,
    /// `η_C` pulled back along every probe stays epi.
    pub condition_b: bool,
}

/// Outcome of an E′ falsification sweep.
#[derive(Debug, Clone)]
pub enum EPrimeVerdict {
    /// No probe refuted membership; this is not a proof.
    Pass { probes: usize },
    Counterexample { probe: usize, pulled_back: NatTrans },
}

impl<A: Adjunction> InducedReflection<A> {
    pub fn new(adjunction: A) -> Self {
        InducedReflection { adjunction }
    }

    pub fn reflect_object(&self, c: &SetFunctor) -> Reflected {
        let theta = self.adjunction.unit(c);
        let fact = factorize(&theta);
        Reflected { theta, image: fact.mid, eta: fact.epi, mu: fact.mono }
    }

    /// `I(f)`, the unique diagonal of the square
    /// `GF(f) ∘ μ_C ∘ η_C = μ_{C'} ∘ η_{C'} ∘ f`.
    pub fn reflect_morphism(&self, f: &NatTrans) -> NatTrans {
        let rc = self.reflect_object(f.source());
        let rc2 = self.reflect_object(f.target());
        self.diagonal(f, &rc, &rc2)
    }

    fn diagonal(&self, f: &NatTrans, rc: &Reflected, rc2: &Reflected) -> NatTrans {
        let gf = self.adjunction.right_map(&self.adjunction.left_map(f));
        let u = rc2.eta.after(f);
        let v = gf.after(&rc.mu);
        match check_orthogonal(&rc.eta, &rc2.mu, &u, &v).expect("unit naturality square commutes") {
            Diagonal::Unique(w) => w,
            other => panic!("epi/mono square without a unique diagonal: {other:?}"),
        }
    }

    /// `C ∈ Mono(F)`: the unit at `C` is componentwise injective.
    pub fn in_subcategory(&self, c: &SetFunctor) -> bool {
        self.adjunction.unit(c).is_mono()
    }

    pub fn is_in_e_i(&self, f: &NatTrans) -> bool {
        self.reflect_morphism(f).is_iso()
    }

    /// The naturality square `η_{C'} ∘ f = I(f) ∘ η_C` is a pullback.
    pub fn is_in_m_i(&self, f: &NatTrans) -> bool {
        let rc = self.reflect_object(f.source());
        let rc2 = self.reflect_object(f.target());
        let i_f = self.diagonal(f, &rc, &rc2);
        is_pullback_square(f, &rc.eta, &rc2.eta, &i_f).expect("naturality square commutes")
    }

    /// Factors `f: C → C'` through `P = C' ×_{I(C')} I(C)`.
    pub fn reflective_factorization(&self, f: &NatTrans) -> Result<ReflectiveFactorization, ReflectError> {
        let rc = self.reflect_object(f.source());
        let rc2 = self.reflect_object(f.target());
        let i_f = self.diagonal(f, &rc, &rc2);
        let pb = pullback_nat(&rc2.eta, &i_f);
        let shape = f.shape();
        let components = (0..shape.object_count())
            .map(|o| {
                (0..f.source().size(o))
                    .map(|x| {
                        let pair = (f.component(o)[x], rc.eta.component(o)[x]);
                        pb.pairs[o].iter().position(|&p| p == pair).expect("pair lies in the pullback")
                    })
                    .collect()
            })
            .collect();
        let e = NatTrans::new(f.source().clone(), pb.object.clone(), components)
            .map_err(|err| ReflectError::VerificationFailed(err.to_string()))?;
        let m = pb.first;
        if m.after(&e) != *f {
            return Err(ReflectError::VerificationFailed("m ∘ e differs from f".into()));
        }
        if !self.is_in_e_i(&e) {
            return Err(ReflectError::VerificationFailed("e is not in E_I".into()));
        }
        if !self.is_in_m_i(&m) {
            return Err(ReflectError::VerificationFailed("m is not in M_I".into()));
        }
        Ok(ReflectiveFactorization { e, middle: pb.object, m })
    }

    /// Pulls `η_C` back along `g: A → I(C)` and checks the stable-units
    /// conditions on this instance.
    pub fn check_stable_units_instance(&self, c: &SetFunctor, g: &NatTrans, probes: &[NatTrans]) -> StableUnitsInstance {
        let rc = self.reflect_object(c);
        assert_eq!(g.target(), &rc.image, "g must land in I(C)");
        let pb = pullback_nat(g, &rc.eta);
        let pulled_back = pb.first.clone();
        let stable = self.is_in_e_i(&pulled_back);
        let gf = |t: &NatTrans| self.adjunction.right_map(&self.adjunction.left_map(t));
        let condition_a = is_pullback_square(&gf(&pb.first), &gf(&pb.second), &gf(g), &gf(&rc.eta)).expect("image of a commutative square commutes");
        let condition_b = probes.iter().all(|p| pullback_nat(&rc.eta, p).second.is_epi());
        StableUnitsInstance { pulled_back, stable, condition_a, condition_b }
    }

    /// Pulls `f` back along each probe and reports the first pullback that
    /// leaves `E_I`.
    pub fn is_in_e_prime_falsify(&self, f: &NatTrans, probes: &[NatTrans]) -> Result<EPrimeVerdict, ReflectError> {
        if !self.is_in_e_i(f) {
            return Err(ReflectError::NotInEI);
        }
        for (i, g) in probes.iter().enumerate() {
            assert_eq!(g.target(), f.target(), "probes must land in the codomain");
            let pulled_back = pullback_nat(f, g).second;
            if !self.is_in_e_i(&pulled_back) {
                return Ok(EPrimeVerdict::Counterexample { probe: i, pulled_back });
            }
        }
        Ok(EPrimeVerdict::Pass { probes: probes.len() })
    }

    /// `p*(f) ∈ M_I` for a cover `p: E → cod(f)` that is epi with `E` in the
    /// subcategory.
    pub fn is_in_m_star(&self, f: &NatTrans, p: &NatTrans) -> Result<bool, ReflectError> {
        if p.target() != f.target() {
            return Err(ReflectError::CoverMismatch);
        }
        if !p.is_epi() {
            return Err(ReflectError::CoverNotEpi);
        }
        if !self.in_subcategory(p.source()) {
            return Err(ReflectError::CoverDomainNotInSubcategory);
        }
        Ok(self.is_in_m_i(&pullback_nat(f, p).second))
    }

    /// `F(η_C)` is an isomorphism.
    pub fn left_inverts_eta(&self, c: &SetFunctor) -> bool {
        self.adjunction.left_map(&self.reflect_object(c).eta).is_iso()
    }

    /// `η_{I(C)}` is an isomorphism.
    pub fn is_idempotent_at(&self, c: &SetFunctor) -> bool {
        let image = self.reflect_object(c).image;
        self.reflect_object(&image).eta.is_iso()
    }
}

/// Comparison of `θ` at a coproduct with the coproduct of the `θ`s.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoproductUnit {
    /// `[GF(ι_i)]: ∐ GF(T_i) → GF(∐ T_i)` is an isomorphism.
    pub comparison_iso: bool,
    /// `[GF(ι_i)] ∘ ∐ θ_{T_i} = θ_{∐ T_i}`.
    pub commutes: bool,
}

pub fn unit_of_coproduct(adj: &dyn Adjunction, functors: &[SetFunctor]) -> CoproductUnit {
    let shape = adj.domain_shape();
    let sum = coproduct(shape, functors);
    let thetas: Vec<NatTrans> = functors.iter().map(|t| adj.unit(t)).collect();
    let targets: Vec<SetFunctor> = thetas.iter().map(|t| t.target().clone()).collect();
    let target_sum = coproduct(shape, &targets);
    let summed = copair_or_empty(&sum, thetas.iter().zip(&target_sum.injections).map(|(t, i)| i.after(t)).collect(), &target_sum.functor);
    let theta_sum = adj.unit(&sum.functor);
    let legs: Vec<NatTrans> =
        sum.injections.iter().map(|i| adj.right_map(&adj.left_map(i))).collect();
    let comparison = copair_or_empty(&target_sum, legs, theta_sum.target());
    CoproductUnit { comparison_iso: comparison.is_iso(), commutes: comparison.after(&summed) == theta_sum }
}

fn copair_or_empty(sum: &Coproduct, legs: Vec<NatTrans>, target: &SetFunctor) -> NatTrans {
    if legs.is_empty() {
        let components = sum.functor.sizes().iter().map(|_| Vec::new()).collect();
        return NatTrans::new(sum.functor.clone(), target.clone(), components).expect("empty map");
    }
    sum.copair(&legs)
}

/// `∐_{(j, x)} J(j, −) → M`, classifying each element by Yoneda.
#[derive(Debug, Clone)]
pub struct Presentation {
    pub cover: Coproduct,
    pub p: NatTrans,
    /// The element `(j, x)` behind each summand.
    pub elements: Vec<(usize, usize)>,
}

pub fn canonical_presentation(m: &SetFunctor) -> Presentation {
    let shape = m.shape();
    let elements: Vec<(usize, usize)> =
        (0..shape.object_count()).flat_map(|j| (0..m.size(j)).map(move |x| (j, x))).collect();
    let reps: Vec<SetFunctor> = elements.iter().map(|&(j, _)| representable(shape, j)).collect();
    let cover = coproduct(shape, &reps);
    let legs: Vec<NatTrans> = elements.iter().map(|&(j, x)| yoneda(m, j, x)).collect();
    let p = copair_or_empty(&cover, legs, m);
    Presentation { cover, p, elements }
}

/// Probes into `target`: every subfunctor inclusion (up to `cap`), then the
/// Yoneda map of every element.
pub fn default_probes(target: &SetFunctor, cap: usize) -> Vec<NatTrans> {
    let mut probes = subfunctors(target, cap);
    let shape = target.shape();
    for j in 0..shape.object_count() {
        for x in 0..target.size(j) {
            if probes.len() >= cap {
                return probes;
            }
            probes.push(yoneda(target, j, x));
        }
    }
    probes
}
