//! Pauli-string Hamiltonians on a few qubits.
//!
//! Qubits are numbered `1..=n` from the left of a Pauli string, and qubit 1 is
//! the leftmost Kronecker factor (the most significant bit of a basis index).

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::numerics::{ComplexMatrix, HermitianOperator, C64};

/// Largest supported register; a dense operator then has 4096² entries.
pub const MAX_QUBITS: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    pub fn matrix(self) -> ComplexMatrix {
        let (o, l, i) = (C64::new(0.0, 0.0), C64::new(1.0, 0.0), C64::new(0.0, 1.0));
        let data = match self {
            Pauli::I => vec![l, o, o, l],
            Pauli::X => vec![o, l, l, o],
            Pauli::Y => vec![o, -i, i, o],
            Pauli::Z => vec![l, o, o, -l],
        };
        ComplexMatrix::new(2, 2, data).expect("2x2")
    }

    fn from_char(c: char) -> Option<Self> {
        match c.to_ascii_uppercase() {
            'I' => Some(Pauli::I),
            'X' => Some(Pauli::X),
            'Y' => Some(Pauli::Y),
            'Z' => Some(Pauli::Z),
            _ => None,
        }
    }

    fn as_char(self) -> char {
        match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        }
    }
}

/// One Pauli letter per qubit, e.g. `XIZI`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PauliString(Vec<Pauli>);

impl PauliString {
    pub fn new(letters: Vec<Pauli>) -> Result<Self> {
        if letters.is_empty() || letters.len() > MAX_QUBITS {
            return Err(Error::invalid(format!(
                "Pauli string length must be in 1..={MAX_QUBITS}, got {}",
                letters.len()
            )));
        }
        Ok(Self(letters))
    }

    /// `letter` on each of `sites` (1-based), identity elsewhere.
    pub fn on_sites(n_qubits: usize, sites: &[(usize, Pauli)]) -> Result<Self> {
        let mut letters = vec![Pauli::I; n_qubits];
        for &(site, p) in sites {
            if site == 0 || site > n_qubits {
                return Err(Error::invalid(format!("site {site} outside 1..={n_qubits}")));
            }
            letters[site - 1] = p;
        }
        Self::new(letters)
    }

    pub fn n_qubits(&self) -> usize {
        self.0.len()
    }

    pub fn letters(&self) -> &[Pauli] {
        &self.0
    }

    /// Bit masks `(flip, phase_z, phase_y)` over basis indices where qubit 1 is
    /// the most significant bit.
    fn masks(&self) -> (usize, usize, usize) {
        let n = self.n_qubits();
        let (mut flip, mut z, mut y) = (0, 0, 0);
        for (k, p) in self.0.iter().enumerate() {
            let bit = 1 << (n - 1 - k);
            match p {
                Pauli::I => {}
                Pauli::X => flip |= bit,
                Pauli::Y => {
                    flip |= bit;
                    y |= bit;
                }
                Pauli::Z => z |= bit,
            }
        }
        (flip, z, y)
    }
}

impl FromStr for PauliString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .chars()
            .map(|c| Pauli::from_char(c).ok_or_else(|| Error::invalid(format!("invalid Pauli letter `{c}` in `{s}`"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(letters)
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|p| write!(f, "{}", p.as_char()))
    }
}

/// `H = Σ c_k P_k` with real coefficients on Pauli strings.
#[derive(Clone, Debug, PartialEq)]
pub struct HamiltonianSpec {
    n_qubits: usize,
    terms: Vec<(f64, PauliString)>,
}

impl HamiltonianSpec {
    pub fn new(n_qubits: usize, terms: Vec<(f64, PauliString)>) -> Result<Self> {
        if n_qubits == 0 || n_qubits > MAX_QUBITS {
            return Err(Error::invalid(format!(
                "n_qubits must be in 1..={MAX_QUBITS}, got {n_qubits}"
            )));
        }
        for (c, s) in &terms {
            if s.n_qubits() != n_qubits {
                return Err(Error::invalid(format!(
                    "Pauli string `{s}` has length {}, expected {n_qubits}",
                    s.n_qubits()
                )));
            }
            if !c.is_finite() {
                return Err(Error::invalid(format!("coefficient {c} of `{s}` is not finite")));
            }
        }
        Ok(Self { n_qubits, terms })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn dim(&self) -> usize {
        1 << self.n_qubits
    }

    pub fn terms(&self) -> &[(f64, PauliString)] {
        &self.terms
    }

    /// Parses the text spec format: one `<coefficient> <pauli-string>` per
    /// line, `#` comments and blank lines ignored. `source` labels errors.
    pub fn parse(text: &str, source: &str) -> Result<Self> {
        let mut terms = Vec::new();
        let mut n_qubits = None;
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |msg: String| Error::Parse {
                path: source.to_string(),
                line: idx + 1,
                msg,
            };
            let mut fields = line.split_whitespace();
            let (Some(coef), Some(string), None) = (fields.next(), fields.next(), fields.next()) else {
                return Err(err(format!("expected `<coefficient> <pauli-string>`, got `{line}`")));
            };
            let coef: f64 = coef.parse().map_err(|_| err(format!("invalid coefficient `{coef}`")))?;
            if !coef.is_finite() {
                return Err(err(format!("coefficient `{coef}` is not finite")));
            }
            let string: PauliString = string.parse().map_err(|e: Error| err(e.to_string()))?;
            match n_qubits {
                None => n_qubits = Some(string.n_qubits()),
                Some(n) if n != string.n_qubits() => {
                    return Err(err(format!(
                        "Pauli string `{string}` has length {}, earlier lines have {n}",
                        string.n_qubits()
                    )))
                }
                Some(_) => {}
            }
            terms.push((coef, string));
        }
        let n = n_qubits.ok_or_else(|| Error::Parse {
            path: source.to_string(),
            line: 0,
            msg: "no Hamiltonian terms found".into(),
        })?;
        Self::new(n, terms)
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::parse(&text, &path.display().to_string())
    }

    /// Text form accepted by [`HamiltonianSpec::parse`].
    pub fn to_spec_text(&self) -> String {
        self.terms.iter().map(|(c, s)| format!("{c:?} {s}\n")).collect()
    }
}

/// `I₂ ⊗ … ⊗ σ ⊗ … ⊗ I₂` with `σ` on qubit `site` (1-based), as an explicit
/// Kronecker product.
pub fn single_site_pauli(letter: Pauli, site: usize, n_qubits: usize) -> Result<HermitianOperator> {
    if n_qubits == 0 || n_qubits > MAX_QUBITS {
        return Err(Error::invalid(format!(
            "n_qubits must be in 1..={MAX_QUBITS}, got {n_qubits}"
        )));
    }
    if site == 0 || site > n_qubits {
        return Err(Error::invalid(format!("site {site} outside 1..={n_qubits}")));
    }
    let mut m = ComplexMatrix::identity(1);
    for j in 1..=n_qubits {
        let factor = if j == site { letter.matrix() } else { Pauli::I.matrix() };
        m = m.kron(&factor);
    }
    HermitianOperator::new(m)
}

/// Dense matrix of `Σ c_k P_k`.
///
/// Each Pauli string is a signed permutation: column `b` has its single
/// nonzero in row `b XOR flip`, so terms are accumulated directly from bit
/// masks instead of through Kronecker products.
pub fn build_hamiltonian(spec: &HamiltonianSpec) -> Result<HermitianOperator> {
    let dim = spec.dim();
    let mut m = ComplexMatrix::zeros(dim, dim);
    for (coef, string) in spec.terms() {
        if string.n_qubits() != spec.n_qubits() {
            return Err(Error::invalid(format!(
                "Pauli string `{string}` has length {}, expected {}",
                string.n_qubits(),
                spec.n_qubits()
            )));
        }
        let (flip, zmask, ymask) = string.masks();
        for col in 0..dim {
            let row = col ^ flip;
            // Z|x⟩ = (-1)^x |x⟩, Y|x⟩ = i(-1)^x |1-x⟩
            let minus = ((col & (zmask | ymask)).count_ones() & 1) == 1;
            let mut phase = if minus { C64::new(-1.0, 0.0) } else { C64::new(1.0, 0.0) };
            phase *= C64::new(0.0, 1.0).powu(ymask.count_ones());
            m[(row, col)] += phase * *coef;
        }
    }
    HermitianOperator::new(m)
}

/// The seven four-qubit Hamiltonians used in the Table-1 benchmark.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Builtin {
    H1,
    H2,
    H3,
    H4,
    HI1,
    HI2,
    HI3,
}

impl Builtin {
    pub const ALL: [Builtin; 7] = [
        Builtin::H1,
        Builtin::H2,
        Builtin::H3,
        Builtin::H4,
        Builtin::HI1,
        Builtin::HI2,
        Builtin::HI3,
    ];

    /// Display name used in CSV files, e.g. `H_I3`.
    pub fn name(self) -> &'static str {
        match self {
            Builtin::H1 => "H_1",
            Builtin::H2 => "H_2",
            Builtin::H3 => "H_3",
            Builtin::H4 => "H_4",
            Builtin::HI1 => "H_I1",
            Builtin::HI2 => "H_I2",
            Builtin::HI3 => "H_I3",
        }
    }

    /// Published Krylov grade, equal to the number of distinct eigenvalues.
    pub fn expected_grade(self) -> usize {
        match self {
            Builtin::H1 => 2,
            Builtin::H2 => 3,
            Builtin::H3 => 4,
            Builtin::H4 => 5,
            Builtin::HI1 => 9,
            Builtin::HI2 => 16,
            Builtin::HI3 => 15,
        }
    }

    pub fn is_ising(self) -> bool {
        matches!(self, Builtin::HI1 | Builtin::HI2 | Builtin::HI3)
    }

    pub fn spec(self) -> HamiltonianSpec {
        const N: usize = 4;
        let x = |site| (0.5, PauliString::on_sites(N, &[(site, Pauli::X)]).unwrap());
        let xx = |j: f64, a, b| (j, PauliString::on_sites(N, &[(a, Pauli::X), (b, Pauli::X)]).unwrap());
        let z_field = || (1..=N).map(|i| (0.5, PauliString::on_sites(N, &[(i, Pauli::Z)]).unwrap()));

        let terms: Vec<_> = match self {
            Builtin::H1 => (1..=1).map(x).collect(),
            Builtin::H2 => (1..=2).map(x).collect(),
            Builtin::H3 => (1..=3).map(x).collect(),
            Builtin::H4 => (1..=4).map(x).collect(),
            Builtin::HI1 => [(1, 2), (1, 3), (2, 3)]
                .into_iter()
                .map(|(a, b)| xx(0.5, a, b))
                .chain(z_field())
                .collect(),
            Builtin::HI2 => [
                (0.4, 1, 2),
                (0.5, 1, 3),
                (0.5, 1, 4),
                (0.5, 2, 3),
                (0.5, 2, 4),
                (0.5, 3, 4),
            ]
            .into_iter()
            .map(|(j, a, b)| xx(j, a, b))
            .chain(z_field())
            .collect(),
            Builtin::HI3 => [
                (0.35, 1, 2),
                (0.4, 1, 3),
                (0.45, 1, 4),
                (0.6, 2, 3),
                (0.55, 2, 4),
                (0.5, 3, 4),
            ]
            .into_iter()
            .map(|(j, a, b)| xx(j, a, b))
            .chain(z_field())
            .collect(),
        };
        HamiltonianSpec::new(N, terms).expect("builtin specs are well-formed")
    }
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Builtin {
    type Err = Error;

    /// Accepts `H_I3`, `HI3`, `hi3`, `H_1`, `H1`, …
    fn from_str(s: &str) -> Result<Self> {
        let key: String = s.chars().filter(|c| *c != '_').collect::<String>().to_ascii_uppercase();
        Builtin::ALL
            .into_iter()
            .find(|b| b.name().replace('_', "") == key)
            .ok_or_else(|| Error::UnknownHamiltonian {
                name: s.to_string(),
                valid: Builtin::ALL.map(Builtin::name).join(", "),
            })
    }
}

/// Spec of a builtin Hamiltonian by name.
pub fn builtin(name: &str) -> Result<HamiltonianSpec> {
    Ok(name.parse::<Builtin>()?.spec())
}
