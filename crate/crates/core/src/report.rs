//! Serializable records for reports.
//!
//! Every algebraic number is written with its minimal polynomial and an
//! isolating interval with exact endpoints, so a reader can re-certify it;
//! the decimal field is for display only. Field order is fixed by the
//! struct definitions, which keeps output byte-stable.

use num_bigint::BigInt;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::coincidence::{CoincidenceKind, CoincidencePair, Mod4Case, TrivialEigenvalues, Witness};
use crate::decimal::{exact_decimal, parse_decimal, round_ratio};
use crate::error::{Error, Result};
use crate::graph::{PineappleParams, VertexSet};
use crate::pineapple::{LimitRow, PineappleSpectrum, RadiusCertificate};
use crate::spectrum::SpectrumReport;
use crate::{AlgebraicNumber, IntPoly, RationalInterval};

fn rational_text(x: &Ratio<BigInt>) -> String {
    exact_decimal(x).unwrap_or_else(|| x.to_string())
}

fn parse_rational(s: &str) -> Option<Ratio<BigInt>> {
    if let Some((n, d)) = s.split_once('/') {
        let (n, d): (BigInt, BigInt) = (n.trim().parse().ok()?, d.trim().parse().ok()?);
        return (d != BigInt::from(0)).then(|| Ratio::new(n, d));
    }
    parse_decimal(s)
}

/// Integer coefficients, constant term first, as decimal strings.
pub fn poly_record(p: &IntPoly) -> Vec<String> {
    p.coeffs().iter().map(ToString::to_string).collect()
}

pub fn poly_from_record(coeffs: &[String]) -> Result<IntPoly> {
    coeffs
        .iter()
        .map(|c| {
            c.parse::<BigInt>()
                .map_err(|_| Error::InvalidArgument(format!("bad coefficient {c:?}")))
        })
        .collect::<Result<Vec<_>>>()
        .map(IntPoly::new)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraicRecord {
    pub minpoly: Vec<String>,
    pub interval: [String; 2],
    pub decimal: String,
}

impl AlgebraicRecord {
    pub fn new(x: &AlgebraicNumber, digits: usize) -> Self {
        let iv = x.interval();
        AlgebraicRecord {
            minpoly: poly_record(x.minpoly()),
            interval: [rational_text(&iv.lo), rational_text(&iv.hi)],
            decimal: x.to_decimal(digits),
        }
    }

    /// Rebuilds the number, re-checking that the interval isolates a root.
    pub fn to_algebraic(&self) -> Result<AlgebraicNumber> {
        let poly = poly_from_record(&self.minpoly)?;
        let bound = |s: &String| {
            parse_rational(s)
                .ok_or_else(|| Error::InvalidArgument(format!("bad interval endpoint {s:?}")))
        };
        let (lo, hi) = (bound(&self.interval[0])?, bound(&self.interval[1])?);
        if lo > hi {
            return Err(Error::InvalidArgument(format!(
                "interval [{lo}, {hi}] is reversed"
            )));
        }
        AlgebraicNumber::new(&poly, RationalInterval::new(lo, hi))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalRecord {
    pub exact: String,
    pub decimal: String,
}

impl RationalRecord {
    pub fn new(x: Ratio<u64>, digits: usize) -> Self {
        let big = Ratio::new(BigInt::from(*x.numer()), BigInt::from(*x.denom()));
        RationalRecord {
            exact: x.to_string(),
            decimal: round_ratio(&big, digits),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRecord {
    /// graph6 of the canonical representative.
    pub graph6: String,
    pub order: usize,
    /// Vertices of the input graph inducing the class.
    pub vertices: Vec<usize>,
    pub radius: AlgebraicRecord,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CollisionRecord {
    pub radius: AlgebraicRecord,
    pub classes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumRecord {
    pub order: usize,
    pub b: usize,
    pub c: usize,
    pub redundancy: RationalRecord,
    pub spectrum: Vec<AlgebraicRecord>,
    pub classes: Vec<ClassRecord>,
    pub collisions: Vec<CollisionRecord>,
}

fn vertices(s: VertexSet) -> Vec<usize> {
    s.iter().collect()
}

impl SpectrumRecord {
    pub fn new(r: &SpectrumReport, digits: usize) -> Self {
        SpectrumRecord {
            order: r.order,
            b: r.b,
            c: r.c,
            redundancy: RationalRecord::new(r.redundancy, digits),
            spectrum: r
                .spectrum
                .iter()
                .map(|x| AlgebraicRecord::new(x, digits))
                .collect(),
            classes: r
                .classes
                .iter()
                .map(|c| ClassRecord {
                    graph6: c.form.graph6().to_string(),
                    order: c.order,
                    vertices: vertices(c.representative),
                    radius: AlgebraicRecord::new(&c.radius, digits),
                })
                .collect(),
            collisions: r
                .collisions
                .iter()
                .map(|g| CollisionRecord {
                    radius: AlgebraicRecord::new(&g.radius, digits),
                    classes: g
                        .classes
                        .iter()
                        .map(|&i| r.classes[i].form.graph6().to_string())
                        .collect(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharpolyRecord {
    pub x_power: i64,
    pub x_plus_one_power: u64,
    pub cubic: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PineappleRecord {
    pub params: PineappleParams,
    pub order: u64,
    pub cubic: Vec<String>,
    pub charpoly: CharpolyRecord,
    pub radius: AlgebraicRecord,
    pub b: u64,
    pub c: u64,
    pub redundancy: RationalRecord,
}

impl PineappleRecord {
    pub fn new(s: &PineappleSpectrum, b: u64, c: u64, digits: usize) -> Self {
        PineappleRecord {
            params: s.params,
            order: s.params.order(),
            cubic: poly_record(&s.cubic),
            charpoly: CharpolyRecord {
                x_power: s.charpoly.x_power,
                x_plus_one_power: s.charpoly.x_plus_one_power,
                cubic: poly_record(&s.charpoly.cubic),
            },
            radius: AlgebraicRecord::new(&s.radius, digits),
            b,
            c,
            redundancy: RationalRecord::new(Ratio::new(b, c), digits),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateRecord {
    pub is_radius: bool,
    pub derivative_positive: bool,
    pub critical_point: AlgebraicRecord,
    pub above_critical_point: bool,
    pub disagreement: bool,
}

impl CertificateRecord {
    pub fn new(c: &RadiusCertificate, digits: usize) -> Self {
        CertificateRecord {
            is_radius: c.is_radius,
            derivative_positive: c.derivative_positive,
            critical_point: AlgebraicRecord::new(&c.critical_point, digits),
            above_critical_point: c.above_critical_point,
            disagreement: c.disagreement(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum WitnessRecord {
    TwoCommon {
        a: i64,
        k: i64,
        case: Mod4Case,
        r: i64,
    },
    OneCommon {
        r: i64,
        s: i64,
        rho: i64,
        m: i64,
        n: i64,
        certificates: Box<[CertificateRecord; 2]>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairRecord {
    pub p1: PineappleParams,
    pub p2: PineappleParams,
    pub kind: CoincidenceKind,
    pub slope: String,
    /// `s²·A` as a decimal string.
    pub a_scaled: String,
    pub common_factor: Vec<String>,
    pub shared: Vec<AlgebraicRecord>,
    pub witness: WitnessRecord,
    pub trivial_eigenvalues: [TrivialEigenvalues; 2],
}

impl PairRecord {
    pub fn new(p: &CoincidencePair, digits: usize) -> Self {
        let witness = match &p.witness {
            Witness::TwoCommon(w) => WitnessRecord::TwoCommon {
                a: w.a,
                k: w.k,
                case: w.case,
                r: w.r,
            },
            Witness::OneCommon(w) => WitnessRecord::OneCommon {
                r: w.slope.r,
                s: w.slope.s,
                rho: w.rho,
                m: w.m,
                n: w.n,
                certificates: Box::new([
                    CertificateRecord::new(&w.certificates[0], digits),
                    CertificateRecord::new(&w.certificates[1], digits),
                ]),
            },
        };
        PairRecord {
            p1: p.p1,
            p2: p.p2,
            kind: p.kind,
            slope: p.slope().to_string(),
            a_scaled: p.a_scaled.to_string(),
            common_factor: poly_record(&p.common_factor),
            shared: p
                .shared
                .iter()
                .map(|x| AlgebraicRecord::new(x, digits))
                .collect(),
            witness,
            trivial_eigenvalues: p.trivial,
        }
    }
}

/// One CSV row of a limit curve.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LimitRecord {
    pub alpha: u64,
    pub beta: u64,
    pub b: u64,
    pub c: u64,
    pub b_minus_c: u64,
    pub r: String,
    pub r_decimal: String,
    pub tail: bool,
}

impl LimitRecord {
    pub fn new(row: &LimitRow, digits: usize) -> Self {
        let r = RationalRecord::new(row.redundancy, digits);
        LimitRecord {
            alpha: row.params.alpha,
            beta: row.params.beta,
            b: row.b,
            c: row.c,
            b_minus_c: row.b - row.c,
            r: r.exact,
            r_decimal: r.decimal,
            tail: row.tail,
        }
    }
}
