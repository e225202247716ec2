//! Value types and the set operations on circular Pythagorean fuzzy sets.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// Slack allowed on `μ² + ν² ≤ 1` so that decimal inputs on the boundary
/// (`0.8, 0.6`) survive parsing.
pub const CONSTRAINT_SLACK: f64 = 1e-9;

fn unit(name: &'static str, value: f64) -> Result<f64> {
    if !value.is_finite() {
        return Err(Error::NotFinite(name));
    }
    if !(0.0..=1.0).contains(&value) {
        return Err(Error::OutOfRange { name, value });
    }
    Ok(value)
}

/// A Pythagorean fuzzy value `⟨μ, ν⟩`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Pfv {
    mu: f64,
    nu: f64,
}

impl Pfv {
    pub fn new(mu: f64, nu: f64) -> Result<Self> {
        let mu = unit("mu", mu)?;
        let nu = unit("nu", nu)?;
        let sum = mu * mu + nu * nu;
        if sum > 1.0 + CONSTRAINT_SLACK {
            return Err(Error::ConstraintViolation { mu, nu, sum });
        }
        Ok(Self { mu, nu })
    }

    /// Builds a value that is valid by construction (results of closed
    /// operations). Checked in debug builds only.
    pub(crate) fn new_unchecked(mu: f64, nu: f64) -> Self {
        debug_assert!(
            Self::new(mu, nu).is_ok(),
            "operation produced an invalid PFV ⟨{mu}, {nu}⟩"
        );
        Self { mu, nu }
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }

    /// Swaps membership and non-membership.
    pub fn complement(&self) -> Self {
        Self {
            mu: self.nu,
            nu: self.mu,
        }
    }
}

impl fmt::Display for Pfv {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨{}, {}⟩", self.mu, self.nu)
    }
}

/// A circular Pythagorean fuzzy value `⟨μ, ν; r⟩`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Cpfv {
    center: Pfv,
    r: f64,
}

impl Cpfv {
    /// The positive ideal `⟨1, 0; 1⟩`.
    pub const IDEAL: Cpfv = Cpfv {
        center: Pfv { mu: 1.0, nu: 0.0 },
        r: 1.0,
    };

    pub fn new(mu: f64, nu: f64, r: f64) -> Result<Self> {
        let center = Pfv::new(mu, nu)?;
        Self::from_center(center, r)
    }

    pub fn from_center(center: Pfv, r: f64) -> Result<Self> {
        if !r.is_finite() {
            return Err(Error::NotFinite("r"));
        }
        if !(0.0..=1.0).contains(&r) {
            return Err(Error::RadiusOutOfRange(r));
        }
        Ok(Self { center, r })
    }

    pub(crate) fn new_unchecked(mu: f64, nu: f64, r: f64) -> Self {
        debug_assert!((0.0..=1.0).contains(&r), "operation produced radius {r}");
        Self {
            center: Pfv::new_unchecked(mu, nu),
            r,
        }
    }

    pub fn center(&self) -> Pfv {
        self.center
    }

    pub fn mu(&self) -> f64 {
        self.center.mu
    }

    pub fn nu(&self) -> f64 {
        self.center.nu
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn complement(&self) -> Self {
        Self {
            center: self.center.complement(),
            r: self.r,
        }
    }

    /// Largest absolute componentwise difference, handy for tolerance checks.
    pub fn max_abs_diff(&self, other: &Cpfv) -> f64 {
        (self.mu() - other.mu())
            .abs()
            .max((self.nu() - other.nu()).abs())
            .max((self.r - other.r).abs())
    }
}

impl fmt::Display for Cpfv {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨{}, {}; {}⟩", self.mu(), self.nu(), self.r)
    }
}

/// How the radius of a union, intersection or min/max algebraic operation is
/// picked from the two operand radii.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RadiusMode {
    Min,
    Max,
}

impl RadiusMode {
    pub fn apply(self, a: f64, b: f64) -> f64 {
        match self {
            RadiusMode::Min => a.min(b),
            RadiusMode::Max => a.max(b),
        }
    }
}

impl FromStr for RadiusMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "min" => Ok(RadiusMode::Min),
            "max" => Ok(RadiusMode::Max),
            other => Err(Error::UnknownOperator(other.to_string())),
        }
    }
}

/// A circular Pythagorean fuzzy set over a finite, ordered universe.
///
/// Every element carries its own radius; a set with one radius for all
/// elements is the special case where they coincide.
#[derive(Debug, Clone, PartialEq)]
pub struct Cpfs {
    elements: Vec<(String, Cpfv)>,
}

impl Cpfs {
    pub fn new<S: Into<String>>(elements: impl IntoIterator<Item = (S, Cpfv)>) -> Result<Self> {
        let elements: Vec<(String, Cpfv)> =
            elements.into_iter().map(|(l, v)| (l.into(), v)).collect();
        let mut seen = HashSet::with_capacity(elements.len());
        for (label, _) in &elements {
            if !seen.insert(label.as_str()) {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        Ok(Self { elements })
    }

    /// Builds a set with one shared radius from `(label, μ, ν)` triples.
    pub fn with_radius<S: Into<String>>(
        r: f64,
        centers: impl IntoIterator<Item = (S, f64, f64)>,
    ) -> Result<Self> {
        let elements = centers
            .into_iter()
            .map(|(label, mu, nu)| Ok((label.into(), Cpfv::new(mu, nu, r)?)))
            .collect::<Result<Vec<(String, Cpfv)>>>()?;
        Self::new(elements)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &Cpfv)> {
        self.elements.iter().map(|(l, v)| (l.as_str(), v))
    }

    pub fn get(&self, label: &str) -> Option<&Cpfv> {
        self.elements
            .iter()
            .find(|(l, _)| l == label)
            .map(|(_, v)| v)
    }

    pub fn values(&self) -> impl Iterator<Item = &Cpfv> {
        self.elements.iter().map(|(_, v)| v)
    }

    pub fn complement(&self) -> Cpfs {
        Cpfs {
            elements: self
                .elements
                .iter()
                .map(|(l, v)| (l.clone(), v.complement()))
                .collect(),
        }
    }

    fn zip_checked<'a>(
        &'a self,
        other: &'a Cpfs,
    ) -> Result<impl Iterator<Item = (&'a str, &'a Cpfv, &'a Cpfv)>> {
        let same = self.elements.len() == other.elements.len()
            && self
                .elements
                .iter()
                .zip(&other.elements)
                .all(|((a, _), (b, _))| a == b);
        if !same {
            return Err(Error::UniverseMismatch);
        }
        Ok(self
            .elements
            .iter()
            .zip(&other.elements)
            .map(|((l, a), (_, b))| (l.as_str(), a, b)))
    }

    /// `self ⊂ other`: radii, memberships not larger and non-memberships not
    /// smaller, element by element.
    pub fn is_subset_of(&self, other: &Cpfs) -> Result<bool> {
        Ok(self
            .zip_checked(other)?
            .all(|(_, a, b)| a.r <= b.r && a.mu() <= b.mu() && a.nu() >= b.nu()))
    }

    /// Exact equality of every center and radius over the same universe.
    pub fn equals(&self, other: &Cpfs) -> Result<bool> {
        Ok(self.zip_checked(other)?.all(|(_, a, b)| a == b))
    }

    pub fn union(&self, other: &Cpfs, mode: RadiusMode) -> Result<Cpfs> {
        self.combine(other, |a, b| {
            Cpfv::new_unchecked(a.mu().max(b.mu()), a.nu().min(b.nu()), mode.apply(a.r, b.r))
        })
    }

    pub fn intersect(&self, other: &Cpfs, mode: RadiusMode) -> Result<Cpfs> {
        self.combine(other, |a, b| {
            Cpfv::new_unchecked(a.mu().min(b.mu()), a.nu().max(b.nu()), mode.apply(a.r, b.r))
        })
    }

    fn combine(&self, other: &Cpfs, f: impl Fn(&Cpfv, &Cpfv) -> Cpfv) -> Result<Cpfs> {
        let elements = self
            .zip_checked(other)?
            .map(|(l, a, b)| (l.to_string(), f(a, b)))
            .collect();
        Ok(Cpfs { elements })
    }
}
