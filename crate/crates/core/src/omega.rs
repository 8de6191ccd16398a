//! Exact symbolic model of an infinite pair of ordered spaces and a map
//! between them that sends clopen upsets to clopen upsets without being open.
//!
//! `X` is the two-point compactification of the discrete set
//! `{x_n} ∪ {z_n}`: `ω` is the limit of the `x_n` and `ω′` the limit of the
//! `z_n`. `Y` is the one-point compactification of `{y_n}` with limit `∞`.
//!
//! Order on `X`: `x_m ≤ x_n` iff `m ≥ n`; `ω′ ≤ ω ≤ x_n`; `z_n ≤ x_m` iff
//! `n ≥ 1` and `m ≤ 2n − 1`; `z_0` is comparable only with itself.
//! Order on `Y`: `y_m ≤ y_n` iff `m ≥ n`; `∞ ≤ y_n`.
//! The map: `x_n ↦ y_n`, `z_n ↦ y_{2n}`, `ω, ω′ ↦ ∞`.
//!
//! Subsets are described by index fibers. The `z`-fiber is finite or
//! cofinite. The `x`- and `y`-fibers are finite-or-cofinite separately on
//! even and odd indices, because `f` doubles `z`-indices: the image of all
//! `z_n` is the set of even `y`-indices. This class contains every clopen
//! set and is closed under every operation here.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Polarity {
    Finite,
    Cofinite,
}

/// A finite or cofinite set of natural numbers. `Finite`: the set is
/// `exceptions`. `Cofinite`: the set is `ℕ ∖ exceptions`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FinOrCofin {
    polarity: Polarity,
    exceptions: BTreeSet<u64>,
}

impl FinOrCofin {
    pub fn empty() -> Self {
        Self::finite([])
    }

    pub fn all() -> Self {
        Self::cofinite([])
    }

    pub fn finite(items: impl IntoIterator<Item = u64>) -> Self {
        Self { polarity: Polarity::Finite, exceptions: items.into_iter().collect() }
    }

    pub fn cofinite(missing: impl IntoIterator<Item = u64>) -> Self {
        Self { polarity: Polarity::Cofinite, exceptions: missing.into_iter().collect() }
    }

    /// `{0, .., k - 1}`.
    pub fn below(k: u64) -> Self {
        Self::finite(0..k)
    }

    /// `{n : n >= k}`.
    pub fn at_least(k: u64) -> Self {
        Self::cofinite(0..k)
    }

    pub fn polarity(&self) -> Polarity {
        self.polarity
    }

    pub fn exceptions(&self) -> &BTreeSet<u64> {
        &self.exceptions
    }

    pub fn contains(&self, n: u64) -> bool {
        match self.polarity {
            Polarity::Finite => self.exceptions.contains(&n),
            Polarity::Cofinite => !self.exceptions.contains(&n),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.polarity == Polarity::Finite
    }

    pub fn is_cofinite(&self) -> bool {
        self.polarity == Polarity::Cofinite
    }

    pub fn is_empty(&self) -> bool {
        self.is_finite() && self.exceptions.is_empty()
    }

    pub fn is_all(&self) -> bool {
        self.is_cofinite() && self.exceptions.is_empty()
    }

    pub fn least(&self) -> Option<u64> {
        match self.polarity {
            Polarity::Finite => self.exceptions.first().copied(),
            Polarity::Cofinite => (0..).find(|n| !self.exceptions.contains(n)),
        }
    }

    /// Largest element of a finite set.
    pub fn greatest(&self) -> Option<u64> {
        match self.polarity {
            Polarity::Finite => self.exceptions.last().copied(),
            Polarity::Cofinite => None,
        }
    }

    pub fn complement(&self) -> Self {
        let polarity = match self.polarity {
            Polarity::Finite => Polarity::Cofinite,
            Polarity::Cofinite => Polarity::Finite,
        };
        Self { polarity, exceptions: self.exceptions.clone() }
    }

    pub fn union(&self, other: &Self) -> Self {
        use Polarity::*;
        let (a, b) = (&self.exceptions, &other.exceptions);
        match (self.polarity, other.polarity) {
            (Finite, Finite) => Self::finite(a | b),
            (Finite, Cofinite) => Self::cofinite(b - a),
            (Cofinite, Finite) => Self::cofinite(a - b),
            (Cofinite, Cofinite) => Self::cofinite(a & b),
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.complement().union(&other.complement()).complement()
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.intersection(&other.complement()).is_empty()
    }

    /// Every set of this class whose exceptions lie in `indices`.
    pub fn bounded(indices: &[u64]) -> Vec<Self> {
        let m = indices.len();
        let mut out = Vec::with_capacity(2 << m);
        for polarity in [Polarity::Finite, Polarity::Cofinite] {
            for mask in 0u64..1 << m {
                let exceptions =
                    (0..m).filter(|&i| mask >> i & 1 == 1).map(|i| indices[i]).collect();
                out.push(Self { polarity, exceptions });
            }
        }
        out
    }

    /// `{}`, `{3, 5}`, `ℕ` or `ℕ∖{0, 2}`.
    fn index_text(&self) -> String {
        let list = self.exceptions.iter().map(u64::to_string).collect::<Vec<_>>().join(", ");
        match self.polarity {
            Polarity::Finite => format!("{{{list}}}"),
            Polarity::Cofinite if self.exceptions.is_empty() => "ℕ".to_string(),
            Polarity::Cofinite => format!("ℕ∖{{{list}}}"),
        }
    }

    fn fmt_with(&self, f: &mut fmt::Formatter<'_>, point: &str) -> fmt::Result {
        match self.polarity {
            Polarity::Finite => {
                let items: Vec<String> = self.exceptions.iter().map(|n| format!("{point}{n}")).collect();
                write!(f, "{{{}}}", items.join(", "))
            }
            Polarity::Cofinite => write!(f, "{{{point}n : n ∈ {}}}", self.index_text()),
        }
    }
}

/// A set of naturals that is finite-or-cofinite on the evens and on the odds
/// separately. `even` holds `k` for each member `2k`; `odd` holds `k` for
/// each member `2k + 1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fiber {
    even: FinOrCofin,
    odd: FinOrCofin,
}

impl Fiber {
    pub fn new(even: FinOrCofin, odd: FinOrCofin) -> Self {
        Self { even, odd }
    }

    pub fn empty() -> Self {
        Self::new(FinOrCofin::empty(), FinOrCofin::empty())
    }

    pub fn all() -> Self {
        Self::new(FinOrCofin::all(), FinOrCofin::all())
    }

    pub fn finite(items: impl IntoIterator<Item = u64>) -> Self {
        let (even, odd): (Vec<u64>, Vec<u64>) = items.into_iter().partition(|n| n % 2 == 0);
        Self::new(
            FinOrCofin::finite(even.into_iter().map(|n| n / 2)),
            FinOrCofin::finite(odd.into_iter().map(|n| n / 2)),
        )
    }

    pub fn cofinite(missing: impl IntoIterator<Item = u64>) -> Self {
        Self::finite(missing).complement()
    }

    /// `{0, .., k - 1}`.
    pub fn below(k: u64) -> Self {
        Self::new(FinOrCofin::below(k.div_ceil(2)), FinOrCofin::below(k / 2))
    }

    /// `{n : n >= k}`.
    pub fn at_least(k: u64) -> Self {
        Self::below(k).complement()
    }

    /// `{2n : n ∈ s}`.
    pub fn doubled(s: &FinOrCofin) -> Self {
        Self::new(s.clone(), FinOrCofin::empty())
    }

    /// `{n : 2n ∈ self}`.
    pub fn halved(&self) -> FinOrCofin {
        self.even.clone()
    }

    pub fn even(&self) -> &FinOrCofin {
        &self.even
    }

    pub fn odd(&self) -> &FinOrCofin {
        &self.odd
    }

    pub fn contains(&self, n: u64) -> bool {
        if n % 2 == 0 { self.even.contains(n / 2) } else { self.odd.contains(n / 2) }
    }

    pub fn is_finite(&self) -> bool {
        self.even.is_finite() && self.odd.is_finite()
    }

    pub fn is_cofinite(&self) -> bool {
        self.even.is_cofinite() && self.odd.is_cofinite()
    }

    pub fn is_empty(&self) -> bool {
        self.even.is_empty() && self.odd.is_empty()
    }

    pub fn is_all(&self) -> bool {
        self.even.is_all() && self.odd.is_all()
    }

    pub fn least(&self) -> Option<u64> {
        let e = self.even.least().map(|k| 2 * k);
        let o = self.odd.least().map(|k| 2 * k + 1);
        e.into_iter().chain(o).min()
    }

    /// Largest element, when the set is finite.
    pub fn greatest(&self) -> Option<u64> {
        if !self.is_finite() {
            return None;
        }
        let e = self.even.greatest().map(|k| 2 * k);
        let o = self.odd.greatest().map(|k| 2 * k + 1);
        e.into_iter().chain(o).max()
    }

    pub fn complement(&self) -> Self {
        Self::new(self.even.complement(), self.odd.complement())
    }

    pub fn union(&self, other: &Self) -> Self {
        Self::new(self.even.union(&other.even), self.odd.union(&other.odd))
    }

    pub fn intersection(&self, other: &Self) -> Self {
        Self::new(self.even.intersection(&other.even), self.odd.intersection(&other.odd))
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.even.is_subset(&other.even) && self.odd.is_subset(&other.odd)
    }

    /// Every fiber whose exceptions lie in `{0, .., bound}`.
    pub fn bounded(bound: u64) -> Vec<Self> {
        let evens: Vec<u64> = (0..=bound).filter(|n| n % 2 == 0).map(|n| n / 2).collect();
        let odds: Vec<u64> = (0..=bound).filter(|n| n % 2 == 1).map(|n| n / 2).collect();
        let odd_sets = FinOrCofin::bounded(&odds);
        let mut out = Vec::new();
        for e in FinOrCofin::bounded(&evens) {
            for o in &odd_sets {
                out.push(Self::new(e.clone(), o.clone()));
            }
        }
        out
    }

    fn fmt_with(&self, f: &mut fmt::Formatter<'_>, point: &str) -> fmt::Result {
        // Present as a single finite or cofinite set when possible.
        if self.is_finite() || self.is_cofinite() {
            let mut idx: Vec<u64> = self.even.exceptions.iter().map(|k| 2 * k).collect();
            idx.extend(self.odd.exceptions.iter().map(|k| 2 * k + 1));
            idx.sort_unstable();
            let flat = if self.is_finite() {
                FinOrCofin::finite(idx)
            } else {
                FinOrCofin::cofinite(idx)
            };
            return flat.fmt_with(f, point);
        }
        let mut parts = Vec::new();
        if !self.even.is_empty() {
            parts.push(format!("{{{point}2k : k ∈ {}}}", self.even.index_text()));
        }
        if !self.odd.is_empty() {
            parts.push(format!("{{{point}2k+1 : k ∈ {}}}", self.odd.index_text()));
        }
        write!(f, "{}", parts.join(" ∪ "))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum XPoint {
    X(u64),
    Z(u64),
    Omega,
    OmegaPrime,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum YPoint {
    Y(u64),
    Infinity,
}

impl fmt::Display for XPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            XPoint::X(n) => write!(f, "x{n}"),
            XPoint::Z(n) => write!(f, "z{n}"),
            XPoint::Omega => write!(f, "ω"),
            XPoint::OmegaPrime => write!(f, "ω′"),
        }
    }
}

impl fmt::Display for YPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            YPoint::Y(n) => write!(f, "y{n}"),
            YPoint::Infinity => write!(f, "∞"),
        }
    }
}

pub fn leq_x(p: XPoint, q: XPoint) -> bool {
    use XPoint::*;
    match (p, q) {
        (X(m), X(n)) => m >= n,
        (Z(m), Z(n)) => m == n,
        (Z(n), X(m)) => n >= 1 && m < 2 * n,
        (Omega, X(_) | Omega) => true,
        (OmegaPrime, X(_) | Omega | OmegaPrime) => true,
        _ => false,
    }
}

pub fn leq_y(p: YPoint, q: YPoint) -> bool {
    match (p, q) {
        (YPoint::Y(m), YPoint::Y(n)) => m >= n,
        (YPoint::Infinity, _) => true,
        (YPoint::Y(_), YPoint::Infinity) => false,
    }
}

pub fn f_point(p: XPoint) -> YPoint {
    match p {
        XPoint::X(n) => YPoint::Y(n),
        XPoint::Z(n) => YPoint::Y(2 * n),
        XPoint::Omega | XPoint::OmegaPrime => YPoint::Infinity,
    }
}

/// A subset of `X`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OmegaXSet {
    pub xs: Fiber,
    pub zs: FinOrCofin,
    pub has_omega: bool,
    pub has_omega_prime: bool,
}

/// A subset of `Y`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OmegaYSet {
    pub ys: Fiber,
    pub has_infty: bool,
}

impl OmegaXSet {
    pub fn empty() -> Self {
        Self { xs: Fiber::empty(), zs: FinOrCofin::empty(), has_omega: false, has_omega_prime: false }
    }

    pub fn whole() -> Self {
        Self { xs: Fiber::all(), zs: FinOrCofin::all(), has_omega: true, has_omega_prime: true }
    }

    pub fn from_points(points: &[XPoint]) -> Self {
        let mut xs = Vec::new();
        let mut zs = Vec::new();
        let mut out = Self::empty();
        for &p in points {
            match p {
                XPoint::X(n) => xs.push(n),
                XPoint::Z(n) => zs.push(n),
                XPoint::Omega => out.has_omega = true,
                XPoint::OmegaPrime => out.has_omega_prime = true,
            }
        }
        out.xs = Fiber::finite(xs);
        out.zs = FinOrCofin::finite(zs);
        out
    }

    pub fn contains(&self, p: XPoint) -> bool {
        match p {
            XPoint::X(n) => self.xs.contains(n),
            XPoint::Z(n) => self.zs.contains(n),
            XPoint::Omega => self.has_omega,
            XPoint::OmegaPrime => self.has_omega_prime,
        }
    }

    pub fn complement(&self) -> Self {
        Self {
            xs: self.xs.complement(),
            zs: self.zs.complement(),
            has_omega: !self.has_omega,
            has_omega_prime: !self.has_omega_prime,
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        Self {
            xs: self.xs.union(&other.xs),
            zs: self.zs.union(&other.zs),
            has_omega: self.has_omega || other.has_omega,
            has_omega_prime: self.has_omega_prime || other.has_omega_prime,
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.complement().union(&other.complement()).complement()
    }

    pub fn is_open(&self) -> bool {
        (!self.has_omega || self.xs.is_cofinite()) && (!self.has_omega_prime || self.zs.is_cofinite())
    }

    pub fn is_closed(&self) -> bool {
        self.complement().is_open()
    }

    pub fn is_clopen(&self) -> bool {
        self.has_omega == self.xs.is_cofinite()
            && self.has_omega_prime == self.zs.is_cofinite()
            && (self.xs.is_finite() || self.xs.is_cofinite())
    }

    /// Topological closure: a limit point joins as soon as its fiber is
    /// infinite.
    pub fn closure(&self) -> Self {
        let mut out = self.clone();
        out.has_omega |= !self.xs.is_finite();
        out.has_omega_prime |= !self.zs.is_finite();
        out
    }

    pub fn interior(&self) -> Self {
        self.complement().closure().complement()
    }

    pub fn up_closure(&self) -> Self {
        let positive_zs = self.zs.intersection(&FinOrCofin::at_least(1));
        let everything_above = self.has_omega
            || self.has_omega_prime
            || !self.xs.is_finite()
            || !positive_zs.is_finite();
        let xs = if everything_above {
            Fiber::all()
        } else {
            // x_m and z_n (n >= 1) generate the segments [0, m] and [0, 2n - 1].
            let from_x = self.xs.greatest().map(|m| m + 1);
            let from_z = positive_zs.greatest().map(|n| 2 * n);
            Fiber::below(from_x.into_iter().chain(from_z).max().unwrap_or(0))
        };
        Self {
            xs,
            zs: self.zs.clone(),
            has_omega: self.has_omega || self.has_omega_prime,
            has_omega_prime: self.has_omega_prime,
        }
    }

    pub fn down_closure(&self) -> Self {
        match self.xs.least() {
            Some(m) => Self {
                xs: Fiber::at_least(m),
                // z_n <= x_m iff n >= 1 and 2n - 1 >= m
                zs: self.zs.union(&FinOrCofin::at_least((m + 1).div_ceil(2).max(1))),
                has_omega: true,
                has_omega_prime: true,
            },
            None => Self {
                has_omega_prime: self.has_omega_prime || self.has_omega,
                ..self.clone()
            },
        }
    }

    pub fn is_upset(&self) -> bool {
        self.up_closure() == *self
    }

    pub fn is_downset(&self) -> bool {
        self.down_closure() == *self
    }

    pub fn image(&self) -> OmegaYSet {
        f_image(self)
    }
}

impl OmegaYSet {
    pub fn empty() -> Self {
        Self { ys: Fiber::empty(), has_infty: false }
    }

    pub fn whole() -> Self {
        Self { ys: Fiber::all(), has_infty: true }
    }

    pub fn from_points(points: &[YPoint]) -> Self {
        let ys = Fiber::finite(points.iter().filter_map(|p| match p {
            YPoint::Y(n) => Some(*n),
            YPoint::Infinity => None,
        }));
        Self { ys, has_infty: points.contains(&YPoint::Infinity) }
    }

    pub fn contains(&self, p: YPoint) -> bool {
        match p {
            YPoint::Y(n) => self.ys.contains(n),
            YPoint::Infinity => self.has_infty,
        }
    }

    pub fn complement(&self) -> Self {
        Self { ys: self.ys.complement(), has_infty: !self.has_infty }
    }

    pub fn union(&self, other: &Self) -> Self {
        Self { ys: self.ys.union(&other.ys), has_infty: self.has_infty || other.has_infty }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.complement().union(&other.complement()).complement()
    }

    pub fn is_open(&self) -> bool {
        !self.has_infty || self.ys.is_cofinite()
    }

    pub fn is_closed(&self) -> bool {
        self.complement().is_open()
    }

    pub fn is_clopen(&self) -> bool {
        self.has_infty == self.ys.is_cofinite() && (self.ys.is_finite() || self.ys.is_cofinite())
    }

    pub fn closure(&self) -> Self {
        Self { ys: self.ys.clone(), has_infty: self.has_infty || !self.ys.is_finite() }
    }

    pub fn interior(&self) -> Self {
        self.complement().closure().complement()
    }

    pub fn up_closure(&self) -> Self {
        let ys = if self.has_infty || !self.ys.is_finite() {
            Fiber::all()
        } else {
            Fiber::below(self.ys.greatest().map_or(0, |m| m + 1))
        };
        Self { ys, has_infty: self.has_infty }
    }

    pub fn down_closure(&self) -> Self {
        match self.ys.least() {
            Some(m) => Self { ys: Fiber::at_least(m), has_infty: true },
            None => self.clone(),
        }
    }

    pub fn is_upset(&self) -> bool {
        self.up_closure() == *self
    }

    pub fn is_downset(&self) -> bool {
        self.down_closure() == *self
    }

    pub fn preimage(&self) -> OmegaXSet {
        f_preimage(self)
    }
}

pub fn f_image(a: &OmegaXSet) -> OmegaYSet {
    OmegaYSet {
        ys: a.xs.union(&Fiber::doubled(&a.zs)),
        has_infty: a.has_omega || a.has_omega_prime,
    }
}

pub fn f_preimage(b: &OmegaYSet) -> OmegaXSet {
    OmegaXSet {
        xs: b.ys.clone(),
        zs: b.ys.halved(),
        has_omega: b.has_infty,
        has_omega_prime: b.has_infty,
    }
}

impl fmt::Display for OmegaXSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.xs.is_empty() {
            parts.push(Shown(|f: &mut fmt::Formatter<'_>| self.xs.fmt_with(f, "x")).to_string());
        }
        if !self.zs.is_empty() {
            parts.push(Shown(|f: &mut fmt::Formatter<'_>| self.zs.fmt_with(f, "z")).to_string());
        }
        let limits: Vec<&str> = [(self.has_omega, "ω"), (self.has_omega_prime, "ω′")]
            .into_iter()
            .filter_map(|(b, s)| b.then_some(s))
            .collect();
        if !limits.is_empty() {
            parts.push(format!("{{{}}}", limits.join(", ")));
        }
        if parts.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "{}", parts.join(" ∪ "))
    }
}

impl fmt::Display for OmegaYSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.ys.is_empty() {
            parts.push(Shown(|f: &mut fmt::Formatter<'_>| self.ys.fmt_with(f, "y")).to_string());
        }
        if self.has_infty {
            parts.push("{∞}".to_string());
        }
        if parts.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "{}", parts.join(" ∪ "))
    }
}

struct Shown<F>(F);

impl<F: Fn(&mut fmt::Formatter<'_>) -> fmt::Result> fmt::Display for Shown<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        (self.0)(f)
    }
}

/// Minimal points of `X`: `ω′` and every `z_n`.
pub fn min_x() -> OmegaXSet {
    OmegaXSet { xs: Fiber::empty(), zs: FinOrCofin::all(), has_omega: false, has_omega_prime: true }
}

/// Minimal points of `Y`: only `∞`.
pub fn min_y() -> OmegaYSet {
    OmegaYSet { ys: Fiber::empty(), has_infty: true }
}

/// Whether the minimal points of `Y` are dense. They are not: `{y0}` is a
/// nonempty open set missing `∞`.
pub fn min_dense_y() -> bool {
    min_dense_witness_y().is_none()
}

/// A nonempty open subset of `Y` disjoint from `min Y`, if one exists among
/// the basic opens `{y_n}`.
pub fn min_dense_witness_y() -> Option<OmegaYSet> {
    let witness = OmegaYSet::from_points(&[YPoint::Y(0)]);
    let disjoint = witness.intersection(&min_y()) == OmegaYSet::empty();
    (witness.is_open() && disjoint).then_some(witness)
}

// ---------------------------------------------------------------------------
// Shapes of clopen upsets.

/// The four families every clopen upset of `X` falls into. `k` is the
/// length of the initial segment `{x_0, .., x_{k-1}}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClopenUpsetShape {
    /// `{x_i : i < k}` plus finitely many `z_n` with `2n < k`.
    Segment { k: u64, zs: BTreeSet<u64> },
    /// `{x_i : i < k}` plus finitely many `z_n` with `2n <= k`, including
    /// the apex `z_{k/2}`; `k` is even.
    SegmentWithApex { k: u64, zs: BTreeSet<u64> },
    /// Every `x_n`, `ω`, finitely many `z_n`.
    Omega { zs: BTreeSet<u64> },
    /// Every `x_n`, `ω`, `ω′`, cofinitely many `z_n`.
    OmegaAndOmegaPrime { missing_zs: BTreeSet<u64> },
}

impl ClopenUpsetShape {
    pub fn family(&self) -> ShapeFamily {
        match self {
            Self::Segment { .. } => ShapeFamily::Segment,
            Self::SegmentWithApex { .. } => ShapeFamily::SegmentWithApex,
            Self::Omega { .. } => ShapeFamily::Omega,
            Self::OmegaAndOmegaPrime { .. } => ShapeFamily::OmegaAndOmegaPrime,
        }
    }

    pub fn to_set(&self) -> OmegaXSet {
        match self {
            Self::Segment { k, zs } | Self::SegmentWithApex { k, zs } => OmegaXSet {
                xs: Fiber::below(*k),
                zs: FinOrCofin::finite(zs.iter().copied()),
                has_omega: false,
                has_omega_prime: false,
            },
            Self::Omega { zs } => OmegaXSet {
                xs: Fiber::all(),
                zs: FinOrCofin::finite(zs.iter().copied()),
                has_omega: true,
                has_omega_prime: false,
            },
            Self::OmegaAndOmegaPrime { missing_zs } => OmegaXSet {
                xs: Fiber::all(),
                zs: FinOrCofin::cofinite(missing_zs.iter().copied()),
                has_omega: true,
                has_omega_prime: true,
            },
        }
    }

    /// Image predicted by the family's template, instantiated at this
    /// shape's parameters. `None` if the template is not a concrete shape.
    pub fn predicted_image(&self) -> Option<OmegaYSet> {
        match (self.family().image_template(), self) {
            (YTemplate::Whole, _) => Some(OmegaYSet::whole()),
            (YTemplate::Segment { offset }, Self::Segment { k, .. } | Self::SegmentWithApex { k, .. }) => {
                Some(OmegaYSet { ys: Fiber::below(k + offset), has_infty: false })
            }
            _ => None,
        }
    }
}

/// Classify a subset of `X` as a clopen upset shape, or `None` if it is not
/// a clopen upset.
pub fn classify(a: &OmegaXSet) -> Option<ClopenUpsetShape> {
    if !a.is_clopen() || !a.is_upset() {
        return None;
    }
    let set_of = |s: &FinOrCofin| s.exceptions().clone();
    Some(match (a.has_omega, a.has_omega_prime) {
        (true, true) => ClopenUpsetShape::OmegaAndOmegaPrime { missing_zs: set_of(&a.zs) },
        (true, false) => ClopenUpsetShape::Omega { zs: set_of(&a.zs) },
        (false, false) => {
            let k = a.xs.greatest().map_or(0, |m| m + 1);
            let zs = set_of(&a.zs);
            if k % 2 == 0 && zs.contains(&(k / 2)) {
                ClopenUpsetShape::SegmentWithApex { k, zs }
            } else {
                ClopenUpsetShape::Segment { k, zs }
            }
        }
        // an upset containing ω′ contains ω
        (false, true) => return None,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ShapeFamily {
    Segment,
    SegmentWithApex,
    Omega,
    OmegaAndOmegaPrime,
}

impl ShapeFamily {
    pub const ALL: [ShapeFamily; 4] =
        [Self::Segment, Self::SegmentWithApex, Self::Omega, Self::OmegaAndOmegaPrime];

    pub fn describe(self) -> &'static str {
        match self {
            Self::Segment => "{x_i : i < k} ∪ Z, Z finite, 2n < k for z_n ∈ Z",
            Self::SegmentWithApex => "{x_i : i < k} ∪ Z, Z finite, k even, z_{k/2} ∈ Z, 2n <= k for z_n ∈ Z",
            Self::Omega => "{x_n} ∪ {ω} ∪ Z, Z finite",
            Self::OmegaAndOmegaPrime => "{x_n} ∪ {ω, ω′} ∪ Z, Z cofinite",
        }
    }

    /// Abstract description of the family, as facts about each component.
    pub fn template(self) -> XTemplate {
        match self {
            Self::Segment => XTemplate {
                xs: Abstract::Segment { offset: 0 },
                zs_doubled: Abstract::FiniteBelow { offset: 0 },
                apex: false,
                omega: false,
                omega_prime: false,
            },
            Self::SegmentWithApex => XTemplate {
                xs: Abstract::Segment { offset: 0 },
                zs_doubled: Abstract::FiniteBelow { offset: 0 },
                apex: true,
                omega: false,
                omega_prime: false,
            },
            Self::Omega => XTemplate {
                xs: Abstract::All,
                zs_doubled: Abstract::Finite,
                apex: false,
                omega: true,
                omega_prime: false,
            },
            Self::OmegaAndOmegaPrime => XTemplate {
                xs: Abstract::All,
                zs_doubled: Abstract::EvensCofinite,
                apex: false,
                omega: true,
                omega_prime: true,
            },
        }
    }

    /// Image of the family under `f`, derived from its template.
    pub fn image_template(self) -> YTemplate {
        self.template().image()
    }
}

/// Abstract value of an index set, with `k` the family's cut parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Abstract {
    /// Exactly `{0, .., k + offset - 1}`.
    Segment { offset: u64 },
    /// Some finite subset of `{0, .., k + offset - 1}`.
    FiniteBelow { offset: u64 },
    /// Some finite set.
    Finite,
    /// Cofinitely many even numbers, no odd ones.
    EvensCofinite,
    /// Every natural number.
    All,
}

impl Abstract {
    fn union(self, other: Abstract) -> Abstract {
        use Abstract::*;
        match (self, other) {
            (All, _) | (_, All) => All,
            (Segment { offset: a }, FiniteBelow { offset: b }) | (FiniteBelow { offset: b }, Segment { offset: a })
                if b <= a =>
            {
                Segment { offset: a }
            }
            (FiniteBelow { offset: a }, FiniteBelow { offset: b }) => FiniteBelow { offset: a.max(b) },
            (Segment { .. } | FiniteBelow { .. } | Finite, Segment { .. } | FiniteBelow { .. } | Finite) => Finite,
            (EvensCofinite, _) | (_, EvensCofinite) => EvensCofinite,
        }
    }

    fn is_finite(self) -> bool {
        matches!(self, Abstract::Segment { .. } | Abstract::FiniteBelow { .. } | Abstract::Finite)
    }

    fn is_cofinite(self) -> bool {
        matches!(self, Abstract::All)
    }

    fn is_initial_segment(self) -> bool {
        matches!(self, Abstract::Segment { .. } | Abstract::All)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct XTemplate {
    pub xs: Abstract,
    /// `{2n : z_n in the set}` excluding the apex.
    pub zs_doubled: Abstract,
    /// Whether `z_{k/2}` is present, contributing `y_k`.
    pub apex: bool,
    pub omega: bool,
    pub omega_prime: bool,
}

impl XTemplate {
    pub fn image(&self) -> YTemplate {
        let mut ys = self.xs.union(self.zs_doubled);
        if self.apex {
            // Segment(k) ∪ {k} = Segment(k + 1)
            ys = match ys {
                Abstract::Segment { offset } => Abstract::Segment { offset: offset + 1 },
                Abstract::All => Abstract::All,
                _ => Abstract::Finite,
            };
        }
        let infty = self.omega || self.omega_prime;
        match ys {
            Abstract::All if infty => YTemplate::Whole,
            Abstract::Segment { offset } if !infty => YTemplate::Segment { offset },
            other => YTemplate::Other { ys: other, infty },
        }
    }
}

/// Abstract image in `Y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum YTemplate {
    /// `{y_i : i < k + offset}`.
    Segment { offset: u64 },
    Whole,
    Other { ys: Abstract, infty: bool },
}

impl YTemplate {
    /// Clopen-upset test on the abstract value, valid for every `k`.
    pub fn is_clopen_upset(self) -> bool {
        let (ys, infty) = match self {
            YTemplate::Segment { offset } => (Abstract::Segment { offset }, false),
            YTemplate::Whole => (Abstract::All, true),
            YTemplate::Other { ys, infty } => (ys, infty),
        };
        let clopen = infty == ys.is_cofinite() && (ys.is_finite() || ys.is_cofinite());
        let upset = ys.is_initial_segment() && (!infty || matches!(ys, Abstract::All));
        clopen && upset
    }

    pub fn describe(self) -> String {
        match self {
            YTemplate::Segment { offset: 0 } => "{y_i : i < k}".into(),
            YTemplate::Segment { offset } => format!("{{y_i : i < k + {offset}}}"),
            YTemplate::Whole => "Y".into(),
            YTemplate::Other { ys, infty } => format!("{ys:?}{}", if infty { " ∪ {∞}" } else { "" }),
        }
    }
}

// ---------------------------------------------------------------------------
// The full check.

#[derive(Clone, Debug, Serialize)]
pub struct ShapeRow {
    pub family: ShapeFamily,
    pub shape: &'static str,
    pub image: String,
    pub image_clopen_upset: bool,
    /// Clopen upsets in the bounded sweep that fell into this family.
    pub instances: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessRow {
    pub u: String,
    pub u_open: bool,
    pub u_upset: bool,
    pub image: String,
    pub image_open: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CounterexampleReport {
    pub bound: u64,
    pub order_reading: &'static str,
    pub x_sets_swept: usize,
    pub y_sets_swept: usize,
    pub x_open_upsets: usize,
    pub y_open_upsets: usize,
    pub clopen_upsets: usize,
    pub shapes: Vec<ShapeRow>,
    pub witness: WitnessRow,
    pub min_y: String,
    pub min_y_dense: bool,
    pub min_x: String,
    pub pass: bool,
}

pub const ORDER_READING: &str = "x_m <= x_n iff m >= n; ω′ <= ω <= x_n; z_n <= x_m iff n >= 1 and m <= 2n-1; \
z_0 isolated; y_m <= y_n iff m >= n; ∞ <= y_n";

fn violation(what: &str, set: impl fmt::Display) -> Error {
    Error::CounterexampleViolation(format!("{what}: {set}"))
}

#[derive(Default)]
struct XTally {
    open_upsets: usize,
    clopen_upsets: usize,
    per_family: [usize; 4],
}

fn check_x_set(a: &OmegaXSet, tally: &mut XTally) -> Result<()> {
    let shape = classify(a);
    let clopen_upset = a.is_clopen() && a.is_upset();
    if shape.is_some() != clopen_upset {
        return Err(violation("classification disagrees with clopen-upset test", a));
    }
    if let Some(shape) = shape {
        tally.clopen_upsets += 1;
        tally.per_family[shape.family() as usize] += 1;
        if shape.to_set() != *a {
            return Err(violation("shape does not reproduce its set", a));
        }
        let image = f_image(a);
        if !(image.is_clopen() && image.is_upset()) {
            return Err(violation("image of clopen upset is not a clopen upset", a));
        }
        if shape.predicted_image() != Some(image) {
            return Err(violation("shape template mispredicts the image", a));
        }
    }
    if a.is_open() && a.is_upset() {
        tally.open_upsets += 1;
        let closed = a.closure();
        if !(closed.is_clopen() && closed.is_upset()) {
            return Err(violation("closure of open upset of X is not a clopen upset", a));
        }
        let image = f_image(a);
        if !image.is_upset() {
            return Err(violation("image of open upset is not an upset", a));
        }
        // the image of the closure is the closure of the image
        if f_image(&closed) != image.closure() {
            return Err(violation("f[cl U] differs from cl f[U]", a));
        }
    }
    Ok(())
}

/// Verify the counterexample: the L-space and L-morphism conditions on every
/// open upset whose exceptions lie in `{0, .., bound}`; that every clopen
/// upset maps to a clopen upset, both over the bounded sweep and per shape
/// family for all parameters; and that `{z_n} ∪ {ω′}` is an open upset
/// whose image is not open.
pub fn check_counterexample(bound: u64) -> Result<CounterexampleReport> {
    if bound == 0 {
        return Err(Error::PreconditionFailed("bound must be at least 1".into()));
    }
    let fibers = Fiber::bounded(bound);
    let zsets = FinOrCofin::bounded(&(0..=bound).collect::<Vec<_>>());

    // X, parallel over x-fibers; results merged in fiber order.
    let tallies: Vec<Result<XTally>> = fibers
        .par_iter()
        .map(|xs| {
            let mut tally = XTally::default();
            for zs in &zsets {
                for flags in 0..4u8 {
                    let a = OmegaXSet {
                        xs: xs.clone(),
                        zs: zs.clone(),
                        has_omega: flags & 1 != 0,
                        has_omega_prime: flags & 2 != 0,
                    };
                    check_x_set(&a, &mut tally)?;
                }
            }
            Ok(tally)
        })
        .collect();
    let mut total = XTally::default();
    for t in tallies {
        let t = t?;
        total.open_upsets += t.open_upsets;
        total.clopen_upsets += t.clopen_upsets;
        for i in 0..4 {
            total.per_family[i] += t.per_family[i];
        }
    }

    // Y: L-space and L-morphism conditions.
    let mut y_open_upsets = 0;
    for ys in &fibers {
        for has_infty in [false, true] {
            let b = OmegaYSet { ys: ys.clone(), has_infty };
            if !(b.is_open() && b.is_upset()) {
                continue;
            }
            y_open_upsets += 1;
            let closed = b.closure();
            if !(closed.is_clopen() && closed.is_upset()) {
                return Err(violation("closure of open upset of Y is not a clopen upset", &b));
            }
            let pre = f_preimage(&b);
            if !(pre.is_open() && pre.is_upset()) {
                return Err(violation("preimage of open upset is not an open upset", &b));
            }
            if pre.closure() != f_preimage(&closed) {
                return Err(violation("cl f⁻¹U differs from f⁻¹ cl U", &b));
            }
        }
    }

    // Shape families, for every parameter value.
    let mut shapes = Vec::new();
    for family in ShapeFamily::ALL {
        let image = family.image_template();
        if !image.is_clopen_upset() {
            return Err(Error::CounterexampleViolation(format!(
                "shape {} maps to {}, not a clopen upset",
                family.describe(),
                image.describe()
            )));
        }
        shapes.push(ShapeRow {
            family,
            shape: family.describe(),
            image: image.describe(),
            image_clopen_upset: true,
            instances: total.per_family[family as usize],
        });
    }

    let u = OmegaXSet {
        xs: Fiber::empty(),
        zs: FinOrCofin::all(),
        has_omega: false,
        has_omega_prime: true,
    };
    let image = f_image(&u);
    let expected = OmegaYSet { ys: Fiber::doubled(&FinOrCofin::all()), has_infty: true };
    if image != expected {
        return Err(violation("unexpected image of the witness", &image));
    }
    if !u.is_open() {
        return Err(violation("witness is not open", &u));
    }
    if image.is_open() {
        return Err(violation("image of the witness is open", &image));
    }
    let witness = WitnessRow {
        u: u.to_string(),
        u_open: true,
        u_upset: u.is_upset(),
        image: image.to_string(),
        image_open: false,
    };

    Ok(CounterexampleReport {
        bound,
        order_reading: ORDER_READING,
        x_sets_swept: fibers.len() * zsets.len() * 4,
        y_sets_swept: fibers.len() * 2,
        x_open_upsets: total.open_upsets,
        y_open_upsets,
        clopen_upsets: total.clopen_upsets,
        shapes,
        witness,
        min_y: min_y().to_string(),
        min_y_dense: min_dense_y(),
        min_x: min_x().to_string(),
        pass: true,
    })
}

/// Graphviz rendering of the first `levels` levels of both spaces, with
/// covering edges and `f` as dashed arrows. Dotted edges mark where an
/// infinite descending chain was cut.
pub fn diagram_dot(levels: u64) -> String {
    use std::fmt::Write;
    let levels = levels.max(1);
    let xs: Vec<u64> = (0..levels).collect();
    // z_n sits under x_{2n-1}; keep those whose cover is drawn, plus z_0
    let zs: Vec<u64> = (0..).take_while(|&n| n == 0 || 2 * n - 1 < levels).collect();
    let y_top = xs.iter().copied().chain(zs.iter().map(|n| 2 * n)).max().unwrap_or(0);
    let ys: Vec<u64> = (0..=y_top).collect();

    let mut s = String::from("digraph omega {\n  rankdir=BT;\n  node [shape=circle];\n");
    s.push_str("  subgraph cluster_x {\n    label=\"X\";\n");
    for &n in &xs {
        let _ = writeln!(s, "    x{n} [label=\"x{n}\"];");
    }
    for &n in &zs {
        let _ = writeln!(s, "    z{n} [label=\"z{n}\"];");
    }
    s.push_str("    omega [label=\"ω\"];\n    omega_p [label=\"ω′\"];\n");
    for w in xs.windows(2) {
        let _ = writeln!(s, "    x{} -> x{};", w[1], w[0]);
    }
    for &n in zs.iter().filter(|&&n| n >= 1) {
        let _ = writeln!(s, "    z{n} -> x{};", 2 * n - 1);
    }
    let _ = writeln!(s, "    omega -> x{} [style=dotted];", levels - 1);
    s.push_str("    omega_p -> omega;\n  }\n");

    s.push_str("  subgraph cluster_y {\n    label=\"Y\";\n");
    for &n in &ys {
        let _ = writeln!(s, "    y{n} [label=\"y{n}\"];");
    }
    s.push_str("    infty [label=\"∞\"];\n");
    for w in ys.windows(2) {
        let _ = writeln!(s, "    y{} -> y{};", w[1], w[0]);
    }
    let _ = writeln!(s, "    infty -> y{y_top} [style=dotted];");
    s.push_str("  }\n");

    for &n in &xs {
        let _ = writeln!(s, "  x{n} -> y{n} [style=dashed, constraint=false];");
    }
    for &n in &zs {
        let _ = writeln!(s, "  z{n} -> y{} [style=dashed, constraint=false];", 2 * n);
    }
    s.push_str("  omega -> infty [style=dashed, constraint=false];\n");
    s.push_str("  omega_p -> infty [style=dashed, constraint=false];\n}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use XPoint::*;

    /// Points with indices up to `m`, plus both limits.
    fn truncated_x(m: u64) -> Vec<XPoint> {
        let mut pts: Vec<XPoint> = (0..=m).map(X).chain((0..=m).map(Z)).collect();
        pts.extend([Omega, OmegaPrime]);
        pts
    }

    #[test]
    fn order_examples() {
        assert!(leq_x(OmegaPrime, X(0)));
        assert!(leq_x(Z(1), X(1)));
        assert!(leq_x(Z(1), X(0)));
        assert!(!leq_x(Z(1), X(2)));
        assert!(leq_y(YPoint::Infinity, YPoint::Y(5)));
        assert!(!leq_x(Z(0), X(0)));
        assert!(!leq_x(X(0), Z(0)));
    }

    #[test]
    fn order_is_partial_and_f_monotone() {
        let pts = truncated_x(9);
        for &p in &pts {
            assert!(leq_x(p, p));
            for &q in &pts {
                if leq_x(p, q) {
                    assert!(leq_y(f_point(p), f_point(q)), "{p} <= {q}");
                    if leq_x(q, p) {
                        assert_eq!(p, q);
                    }
                }
                for &r in &pts {
                    if leq_x(p, q) && leq_x(q, r) {
                        assert!(leq_x(p, r));
                    }
                }
            }
        }
    }

    #[test]
    fn documented_sets() {
        assert_eq!(f_image(&OmegaXSet::empty()), OmegaYSet::empty());
        assert_eq!(f_preimage(&OmegaYSet::whole()), OmegaXSet::whole());
        let zs = OmegaXSet { zs: FinOrCofin::all(), ..OmegaXSet::empty() };
        let closed = zs.closure();
        assert!(closed.has_omega_prime && !closed.has_omega);
        assert_eq!(
            OmegaXSet::from_points(&[Z(1)]).up_closure(),
            OmegaXSet::from_points(&[Z(1), X(1), X(0)])
        );
        let u = min_x();
        assert!(u.is_open());
        assert!(!f_image(&u).is_open());
        assert_eq!(f_image(&u).to_string(), "{y2k : k ∈ ℕ} ∪ {∞}");
    }

    #[test]
    fn minimal_points_match_brute_force() {
        let pts = truncated_x(12);
        let bound = 10;
        for &p in pts.iter().filter(|p| !matches!(p, X(n) | Z(n) if *n > bound)) {
            let minimal = pts.iter().all(|&q| !leq_x(q, p) || q == p);
            assert_eq!(min_x().contains(p), minimal, "{p}");
        }
        assert!(!min_dense_y());
        assert_eq!(min_y(), OmegaYSet::from_points(&[YPoint::Infinity]));
    }

    #[test]
    fn counterexample_holds_at_small_bound() {
        let report = check_counterexample(3).unwrap();
        assert!(report.pass);
        assert!(!report.min_y_dense);
        assert!(report.shapes.iter().all(|row| row.instances > 0));
    }

    #[test]
    fn shape_templates_evaluate_to_clopen_upsets() {
        for family in ShapeFamily::ALL {
            assert!(family.image_template().is_clopen_upset(), "{family:?}");
        }
        assert_eq!(ShapeFamily::Segment.image_template(), YTemplate::Segment { offset: 0 });
        assert_eq!(ShapeFamily::SegmentWithApex.image_template(), YTemplate::Segment { offset: 1 });
        // the evaluator can say no
        assert!(!YTemplate::Other { ys: Abstract::EvensCofinite, infty: true }.is_clopen_upset());
    }

    #[test]
    fn segment_example() {
        let k = 5;
        let a = OmegaXSet { xs: Fiber::below(k), ..OmegaXSet::empty() };
        let shape = classify(&a).unwrap();
        assert_eq!(shape, ClopenUpsetShape::Segment { k, zs: BTreeSet::new() });
        assert_eq!(f_image(&a), OmegaYSet { ys: Fiber::below(k), has_infty: false });
    }

    fn fin_or_cofin() -> impl Strategy<Value = FinOrCofin> {
        (any::<bool>(), prop::collection::btree_set(0u64..12, 0..5)).prop_map(|(cof, s)| {
            if cof { FinOrCofin::cofinite(s) } else { FinOrCofin::finite(s) }
        })
    }

    fn fiber() -> impl Strategy<Value = Fiber> {
        (fin_or_cofin(), fin_or_cofin()).prop_map(|(e, o)| Fiber::new(e, o))
    }

    fn x_set() -> impl Strategy<Value = OmegaXSet> {
        (fiber(), fin_or_cofin(), any::<bool>(), any::<bool>()).prop_map(|(xs, zs, w, wp)| OmegaXSet {
            xs,
            zs,
            has_omega: w,
            has_omega_prime: wp,
        })
    }

    fn y_set() -> impl Strategy<Value = OmegaYSet> {
        (fiber(), any::<bool>()).prop_map(|(ys, has_infty)| OmegaYSet { ys, has_infty })
    }

    const PROBE: u64 = 40;

    proptest! {
        #[test]
        fn fin_or_cofin_ops_are_pointwise(a in fin_or_cofin(), b in fin_or_cofin()) {
            for n in 0..PROBE {
                prop_assert_eq!(a.union(&b).contains(n), a.contains(n) || b.contains(n));
                prop_assert_eq!(a.intersection(&b).contains(n), a.contains(n) && b.contains(n));
                prop_assert_eq!(a.complement().contains(n), !a.contains(n));
            }
        }

        #[test]
        fn image_and_preimage_are_pointwise(a in x_set(), b in y_set()) {
            let img = f_image(&a);
            let pre = f_preimage(&b);
            for p in truncated_x(PROBE) {
                prop_assert_eq!(pre.contains(p), b.contains(f_point(p)));
            }
            for n in 0..PROBE {
                // y_n is hit by x_n, and by z_{n/2} when n is even
                let hit = a.contains(X(n)) || (n % 2 == 0 && a.contains(Z(n / 2)));
                prop_assert_eq!(img.contains(YPoint::Y(n)), hit);
            }
        }

        #[test]
        fn closures_match_brute_force_on_finite_sets(
            xs in prop::collection::btree_set(0u64..10, 0..4),
            zs in prop::collection::btree_set(0u64..10, 0..4),
            w in any::<bool>(),
            wp in any::<bool>(),
        ) {
            let mut pts: Vec<XPoint> = xs.iter().map(|&n| X(n)).chain(zs.iter().map(|&n| Z(n))).collect();
            if w { pts.push(Omega); }
            if wp { pts.push(OmegaPrime); }
            let a = OmegaXSet::from_points(&pts);
            let up = a.up_closure();
            let down = a.down_closure();
            for q in truncated_x(PROBE) {
                prop_assert_eq!(up.contains(q), pts.iter().any(|&p| leq_x(p, q)), "up {}", q);
                prop_assert_eq!(down.contains(q), pts.iter().any(|&p| leq_x(q, p)), "down {}", q);
            }
        }

        #[test]
        fn closures_are_closure_operators(a in x_set(), b in y_set()) {
            for c in [a.up_closure(), a.down_closure(), a.closure()] {
                prop_assert!(a.xs.is_subset(&c.xs) && a.zs.is_subset(&c.zs));
            }
            prop_assert_eq!(a.up_closure().up_closure(), a.up_closure());
            prop_assert_eq!(a.down_closure().down_closure(), a.down_closure());
            prop_assert_eq!(a.closure().closure(), a.closure());
            prop_assert!(a.closure().is_closed());
            prop_assert!(a.interior().is_open());
            prop_assert_eq!(b.up_closure().up_closure(), b.up_closure());
            prop_assert_eq!(b.down_closure().down_closure(), b.down_closure());
            prop_assert!(b.closure().is_closed());
            // complement swaps upsets and downsets
            prop_assert_eq!(a.up_closure().complement().is_downset(), true);
            prop_assert_eq!(b.down_closure().complement().is_upset(), true);
        }

        #[test]
        fn upset_images_are_upsets_of_y_when_open(a in x_set()) {
            let u = a.up_closure().interior().up_closure();
            if u.is_open() && u.is_upset() {
                prop_assert!(f_image(&u).is_upset());
            }
        }
    }
}
