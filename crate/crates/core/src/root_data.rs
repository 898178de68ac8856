//! Cartan matrices of simple root systems and `pi_1^ss`, the weight lattice
//! modulo the root lattice.
//!
//! Entries follow `a_ij = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j)` with
//! Bourbaki numbering, so `G2 = [[2, -1], [-3, 2]]`, the double bond of `B_n`
//! sits at `a_{n-1,n} = -2`, and `F4` has `a_23 = -2`. The cokernel does not
//! depend on transposition, so the convention only matters for display.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::abelian::FiniteAbelian;
use crate::error::{Error, Result};
use crate::snf::IntMatrix;

pub use crate::snf::{smith_normal_form, SnfResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RootType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl RootType {
    pub const ALL: [RootType; 7] = [
        RootType::A,
        RootType::B,
        RootType::C,
        RootType::D,
        RootType::E,
        RootType::F,
        RootType::G,
    ];

    pub fn is_valid_rank(self, n: usize) -> bool {
        match self {
            RootType::A => n >= 1,
            RootType::B => n >= 2,
            RootType::C => n >= 3,
            RootType::D => n >= 4,
            RootType::E => (6..=8).contains(&n),
            RootType::F => n == 4,
            RootType::G => n == 2,
        }
    }

    fn letter(self) -> char {
        match self {
            RootType::A => 'A',
            RootType::B => 'B',
            RootType::C => 'C',
            RootType::D => 'D',
            RootType::E => 'E',
            RootType::F => 'F',
            RootType::G => 'G',
        }
    }
}

impl TryFrom<char> for RootType {
    type Error = Error;

    fn try_from(c: char) -> Result<Self> {
        Ok(match c.to_ascii_uppercase() {
            'A' => RootType::A,
            'B' => RootType::B,
            'C' => RootType::C,
            'D' => RootType::D,
            'E' => RootType::E,
            'F' => RootType::F,
            'G' => RootType::G,
            _ => return Err(Error::InvalidRootDatum(format!("unknown type `{c}`"))),
        })
    }
}

/// A validated `(type, rank)` label such as `E8`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootLabel {
    pub kind: RootType,
    pub rank: usize,
}

impl RootLabel {
    pub fn new(kind: RootType, rank: usize) -> Result<Self> {
        if !kind.is_valid_rank(rank) {
            return Err(Error::InvalidRootDatum(format!("{}{rank} is not a simple type", kind.letter())));
        }
        Ok(Self { kind, rank })
    }

    /// Every simple type of rank at most `max_rank`, `C2` excluded as `B2`.
    pub fn all_up_to(max_rank: usize) -> Vec<RootLabel> {
        RootType::ALL
            .iter()
            .flat_map(|&t| (1..=max_rank).filter_map(move |n| RootLabel::new(t, n).ok()))
            .collect()
    }
}

impl FromStr for RootLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let kind = RootType::try_from(
            chars
                .next()
                .ok_or_else(|| Error::InvalidRootDatum("empty label".into()))?,
        )?;
        let rank = chars
            .as_str()
            .trim_start_matches('_')
            .parse::<usize>()
            .map_err(|_| Error::InvalidRootDatum(format!("bad rank in `{s}`")))?;
        RootLabel::new(kind, rank)
    }
}

impl fmt::Display for RootLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind.letter(), self.rank)
    }
}

impl Serialize for RootLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CartanMatrix {
    pub label: RootLabel,
    pub entries: IntMatrix,
}

impl CartanMatrix {
    pub fn rank(&self) -> usize {
        self.label.rank
    }
}

pub fn cartan_matrix(kind: RootType, rank: usize) -> Result<CartanMatrix> {
    let label = RootLabel::new(kind, rank)?;
    let n = rank;
    let mut m = vec![vec![0i64; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut bond = |i: usize, j: usize| {
        m[i - 1][j - 1] = -1;
        m[j - 1][i - 1] = -1;
    };
    match kind {
        RootType::A | RootType::B | RootType::C => {
            for i in 1..n {
                bond(i, i + 1);
            }
        }
        RootType::D => {
            for i in 1..n - 1 {
                bond(i, i + 1);
            }
            bond(n - 2, n);
        }
        RootType::E => {
            bond(1, 3);
            bond(2, 4);
            for i in 3..n {
                bond(i, i + 1);
            }
        }
        RootType::F => {
            bond(1, 2);
            bond(2, 3);
            bond(3, 4);
        }
        RootType::G => bond(1, 2),
    }
    match kind {
        RootType::B => m[n - 2][n - 1] = -2,
        RootType::C => m[n - 1][n - 2] = -2,
        RootType::F => m[1][2] = -2,
        RootType::G => m[1][0] = -3,
        _ => {}
    }
    Ok(CartanMatrix { label, entries: m })
}

/// Cokernel of the Cartan matrix with its Smith-form certificate.
#[derive(Debug, Clone, Serialize)]
pub struct FundamentalGroup {
    pub label: RootLabel,
    pub group: FiniteAbelian,
    pub snf: SnfResult,
}

pub fn fundamental_group_ss(kind: RootType, rank: usize) -> Result<FiniteAbelian> {
    Ok(fundamental_group_with_certificate(kind, rank)?.group)
}

pub fn fundamental_group_with_certificate(kind: RootType, rank: usize) -> Result<FundamentalGroup> {
    let c = cartan_matrix(kind, rank)?;
    let snf = smith_normal_form(&c.entries)?;
    let factors = snf.nontrivial_factors().iter().map(|&d| d as u64).collect();
    Ok(FundamentalGroup {
        label: c.label,
        group: FiniteAbelian::new(factors)?,
        snf,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KernelCheck {
    pub kernel: FiniteAbelian,
    pub hom_count: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SimplyConnectedReport {
    pub label: RootLabel,
    pub fundamental_group: FiniteAbelian,
    pub simply_connected: bool,
    pub kernels: Vec<KernelCheck>,
    /// Simply connected types admit only the zero map into each kernel.
    pub holds: bool,
}

pub fn simply_connected_check(kind: RootType, rank: usize, kernels: &[FiniteAbelian]) -> Result<SimplyConnectedReport> {
    let pi1 = fundamental_group_ss(kind, rank)?;
    let checks: Vec<KernelCheck> = kernels
        .iter()
        .map(|a| KernelCheck {
            kernel: a.clone(),
            hom_count: pi1.hom_count(a),
        })
        .collect();
    let simply_connected = pi1.is_trivial();
    let holds = !simply_connected || checks.iter().all(|c| c.hom_count == 1);
    Ok(SimplyConnectedReport {
        label: RootLabel::new(kind, rank)?,
        fundamental_group: pi1,
        simply_connected,
        kernels: checks,
        holds,
    })
}
