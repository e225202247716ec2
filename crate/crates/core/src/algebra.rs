//! Algebraic operations on C-PFVs.
//!
//! Two families are provided. The min/max and general t-norm forms combine
//! centers with a dual t-norm/t-conorm pair and radii with an arbitrary binary
//! operation. The generator forms push every component through an additive
//! generator, add (or scale) in generator space and map back; with the
//! algebraic generators these reduce to the usual probabilistic sums and
//! products, e.g. `⟨√(μ₁² + μ₂² − μ₁²μ₂²), ν₁ν₂; r₁r₂⟩` for a q-sum.

use crate::generators::{dual_tconorm, Generator, GeneratorPair};
use crate::model::{Cpfv, RadiusMode};
use crate::{Error, Result};

fn combine(gen: &dyn Generator, x: f64, y: f64) -> f64 {
    gen.inverse(gen.forward(x) + gen.forward(y))
}

fn scale(gen: &dyn Generator, lambda: f64, x: f64) -> f64 {
    gen.inverse(lambda * gen.forward(x))
}

fn check_scalar(lambda: f64) -> Result<()> {
    if lambda.is_finite() && lambda > 0.0 {
        Ok(())
    } else {
        Err(Error::NonPositiveScalar(lambda))
    }
}

/// `a ⊕ b = ⟨h⁻¹(h(μa) + h(μb)), g⁻¹(g(νa) + g(νb)); q⁻¹(q(ra) + q(rb))⟩`.
pub fn add(a: &Cpfv, b: &Cpfv, gens: &GeneratorPair) -> Cpfv {
    Cpfv::new_unchecked(
        combine(&*gens.h, a.mu(), b.mu()),
        combine(&*gens.g, a.nu(), b.nu()),
        combine(&*gens.q, a.r(), b.r()),
    )
}

/// `a ⊗ b = ⟨g⁻¹(g(μa) + g(μb)), h⁻¹(h(νa) + h(νb)); q⁻¹(q(ra) + q(rb))⟩`.
pub fn multiply(a: &Cpfv, b: &Cpfv, gens: &GeneratorPair) -> Cpfv {
    Cpfv::new_unchecked(
        combine(&*gens.g, a.mu(), b.mu()),
        combine(&*gens.h, a.nu(), b.nu()),
        combine(&*gens.q, a.r(), b.r()),
    )
}

/// `λa = ⟨h⁻¹(λh(μ)), g⁻¹(λg(ν)); q⁻¹(λq(r))⟩` for `λ > 0`.
pub fn scalar_multiple(lambda: f64, a: &Cpfv, gens: &GeneratorPair) -> Result<Cpfv> {
    check_scalar(lambda)?;
    Ok(Cpfv::new_unchecked(
        scale(&*gens.h, lambda, a.mu()),
        scale(&*gens.g, lambda, a.nu()),
        scale(&*gens.q, lambda, a.r()),
    ))
}

/// `a^λ = ⟨g⁻¹(λg(μ)), h⁻¹(λh(ν)); q⁻¹(λq(r))⟩` for `λ > 0`.
pub fn power(a: &Cpfv, lambda: f64, gens: &GeneratorPair) -> Result<Cpfv> {
    check_scalar(lambda)?;
    Ok(Cpfv::new_unchecked(
        scale(&*gens.g, lambda, a.mu()),
        scale(&*gens.h, lambda, a.nu()),
        scale(&*gens.q, lambda, a.r()),
    ))
}

/// Product t-norm.
pub fn product(x: f64, y: f64) -> f64 {
    x * y
}

/// Pythagorean dual of the product, `√(x² + y² − x²y²)`.
pub fn pythagorean_sum(x: f64, y: f64) -> f64 {
    let (x2, y2) = (x * x, y * y);
    (x2 + y2 - x2 * y2).sqrt().min(1.0)
}

/// `⟨S(μa, μb), T(νa, νb); Q(ra, rb)⟩` where `S` is the Pythagorean dual of `tnorm`.
pub fn add_general<T, Q>(a: &Cpfv, b: &Cpfv, tnorm: T, radius_op: Q) -> Cpfv
where
    T: Fn(f64, f64) -> f64,
    Q: Fn(f64, f64) -> f64,
{
    let nu = tnorm(a.nu(), b.nu());
    let conorm = dual_tconorm(tnorm);
    Cpfv::new_unchecked(conorm(a.mu(), b.mu()), nu, radius_op(a.r(), b.r()))
}

/// `⟨T(μa, μb), S(νa, νb); Q(ra, rb)⟩` where `S` is the Pythagorean dual of `tnorm`.
pub fn multiply_general<T, Q>(a: &Cpfv, b: &Cpfv, tnorm: T, radius_op: Q) -> Cpfv
where
    T: Fn(f64, f64) -> f64,
    Q: Fn(f64, f64) -> f64,
{
    let mu = tnorm(a.mu(), b.mu());
    let conorm = dual_tconorm(tnorm);
    Cpfv::new_unchecked(mu, conorm(a.nu(), b.nu()), radius_op(a.r(), b.r()))
}

/// Algebraic sum of centers with the radius picked by `mode`.
pub fn add_minmax(a: &Cpfv, b: &Cpfv, mode: RadiusMode) -> Cpfv {
    Cpfv::new_unchecked(
        pythagorean_sum(a.mu(), b.mu()),
        a.nu() * b.nu(),
        mode.apply(a.r(), b.r()),
    )
}

/// Algebraic product of centers with the radius picked by `mode`.
pub fn multiply_minmax(a: &Cpfv, b: &Cpfv, mode: RadiusMode) -> Cpfv {
    Cpfv::new_unchecked(
        a.mu() * b.mu(),
        pythagorean_sum(a.nu(), b.nu()),
        mode.apply(a.r(), b.r()),
    )
}
