//! Additive generators and the t-norms / t-conorms they induce.
//!
//! A continuous strict Archimedean t-norm `T` is represented by a strictly
//! decreasing generator `g: [0, 1] → [0, ∞]` with `g(1) = 0` through
//! `T(x, y) = g⁻¹(g(x) + g(y))`. Its dual under the Pythagorean complement
//! `N(a) = √(1 − a²)` is generated by the increasing function
//! `h(t) = g(√(1 − t²))`.
//!
//! Generator values live in the extended half-line: `g(0) = +∞` is returned
//! as `f64::INFINITY`, sums involving it stay infinite, and the inverses map
//! `+∞` back to the boundary (0 for decreasing, 1 for increasing generators).
//! The built-in algebraic family is written in terms of `ln`, `ln_1p` and
//! `exp_m1`, so weighted sums of generator values are sums of logarithms and
//! small arguments do not underflow.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::{Error, Result};

/// An additive generator together with its inverse.
pub trait Generator: fmt::Debug + Send + Sync {
    /// Maps `[0, 1]` into `[0, +∞]`.
    fn forward(&self, t: f64) -> f64;

    /// Maps `[0, +∞]` back into `[0, 1]`.
    fn inverse(&self, s: f64) -> f64;

    /// `true` for t-norm generators (`forward(1) = 0`), `false` for the
    /// t-conorm side (`forward(0) = 0`).
    fn is_decreasing(&self) -> bool {
        true
    }
}

/// `g(t) = −ln t²`, generating the product t-norm.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Algebraic;

impl Generator for Algebraic {
    fn forward(&self, t: f64) -> f64 {
        -2.0 * t.ln()
    }

    fn inverse(&self, s: f64) -> f64 {
        (-0.5 * s).exp()
    }
}

/// `h(t) = −ln(1 − t²)`, the Pythagorean dual of [`Algebraic`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct AlgebraicDual;

impl Generator for AlgebraicDual {
    fn forward(&self, t: f64) -> f64 {
        -(-t * t).ln_1p()
    }

    fn inverse(&self, s: f64) -> f64 {
        (-(-s).exp_m1()).sqrt()
    }

    fn is_decreasing(&self) -> bool {
        false
    }
}

/// `h(t) = g(√(1 − t²))` for an arbitrary decreasing generator `g`.
#[derive(Debug, Clone)]
pub struct PythagoreanDual<G>(pub G);

impl<G: Generator> Generator for PythagoreanDual<G> {
    fn forward(&self, t: f64) -> f64 {
        self.0.forward(pythagorean_complement(t))
    }

    fn inverse(&self, s: f64) -> f64 {
        pythagorean_complement(self.0.inverse(s))
    }

    fn is_decreasing(&self) -> bool {
        !self.0.is_decreasing()
    }
}

impl<G: Generator + ?Sized> Generator for Arc<G> {
    fn forward(&self, t: f64) -> f64 {
        (**self).forward(t)
    }

    fn inverse(&self, s: f64) -> f64 {
        (**self).inverse(s)
    }

    fn is_decreasing(&self) -> bool {
        (**self).is_decreasing()
    }
}

pub fn algebraic_generator() -> Algebraic {
    Algebraic
}

pub fn algebraic_dual_generator() -> AlgebraicDual {
    AlgebraicDual
}

/// `N(a) = √(1 − a²)`.
pub fn pythagorean_complement(a: f64) -> f64 {
    ((1.0 - a) * (1.0 + a)).max(0.0).sqrt()
}

/// `T(x, y) = g⁻¹(g(x) + g(y))`.
pub fn tnorm_from_generator<G: Generator>(gen: G) -> impl Fn(f64, f64) -> f64 {
    move |x, y| gen.inverse(gen.forward(x) + gen.forward(y))
}

/// The t-conorm dual to `tnorm` under the Pythagorean complement,
/// `S(x, y) = √(1 − T²(√(1 − x²), √(1 − y²)))`.
pub fn dual_tconorm<T: Fn(f64, f64) -> f64>(tnorm: T) -> impl Fn(f64, f64) -> f64 {
    move |x, y| pythagorean_complement(tnorm(pythagorean_complement(x), pythagorean_complement(y)))
}

/// Built-in radius generators, selected by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RadiusGenerator {
    /// `q(t) = −ln t²`: radii combine like a t-norm (product).
    Q,
    /// `p(t) = −ln(1 − t²)`: radii combine like the dual t-conorm.
    P,
}

impl RadiusGenerator {
    pub fn id(self) -> &'static str {
        match self {
            RadiusGenerator::Q => "algebraic_q",
            RadiusGenerator::P => "algebraic_p",
        }
    }

    pub fn generator(self) -> Arc<dyn Generator> {
        match self {
            RadiusGenerator::Q => Arc::new(Algebraic),
            RadiusGenerator::P => Arc::new(AlgebraicDual),
        }
    }
}

impl FromStr for RadiusGenerator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "algebraic_q" => Ok(RadiusGenerator::Q),
            "algebraic_p" => Ok(RadiusGenerator::P),
            other => Err(Error::UnknownGenerator(other.to_string())),
        }
    }
}

impl fmt::Display for RadiusGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// The three generators every C-PFV operation is built from: `g` on the
/// non-membership side of sums, `h` on the membership side, `q` on radii.
#[derive(Debug, Clone)]
pub struct GeneratorPair {
    pub g: Arc<dyn Generator>,
    pub h: Arc<dyn Generator>,
    pub q: Arc<dyn Generator>,
}

impl GeneratorPair {
    /// Derives `h` from `g` as `h(t) = g(√(1 − t²))`.
    pub fn new<G, Q>(g: G, q: Q) -> Self
    where
        G: Generator + Clone + 'static,
        Q: Generator + 'static,
    {
        Self {
            h: Arc::new(PythagoreanDual(g.clone())),
            g: Arc::new(g),
            q: Arc::new(q),
        }
    }

    /// The algebraic family with the closed-form dual `h(t) = −ln(1 − t²)`.
    pub fn algebraic(radius: RadiusGenerator) -> Self {
        Self {
            g: Arc::new(Algebraic),
            h: Arc::new(AlgebraicDual),
            q: radius.generator(),
        }
    }
}
