//! Parameters naming a generalized Fibonacci (`φ`) or Lucas (`ψ`) class and
//! the classical families that are special cases of them.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{int, parse_rational, rat, Rational};

/// Which of the two recurrences: `φ` (seeds `1, a·x`) or `ψ` (seeds `2, r·x`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Phi,
    Psi,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Phi => "phi",
            Kind::Psi => "psi",
        })
    }
}

impl FromStr for Kind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Kind> {
        match s.trim().to_ascii_lowercase().as_str() {
            "phi" | "fib" => Ok(Kind::Phi),
            "psi" | "luc" => Ok(Kind::Psi),
            _ => Err(Error::Parse(s.to_string())),
        }
    }
}

/// Named special cases of the two classes.
///
/// The index convention follows the classes, not the classical names:
/// `φ^{1,1}_j = F_{j+1}` while `ψ^{1,1}_j = L_j`. Chebyshev `T_j` is
/// `½ψ^{2,−1}_j`; the ½ only affects display.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilyTag {
    Fibonacci,
    Pell,
    Fermat,
    ChebyshevU,
    DicksonE(Rational),
    Lucas,
    PellLucas,
    FermatLucas,
    ChebyshevT,
    DicksonD(Rational),
}

impl FamilyTag {
    /// `(kind, a, b)` of the corresponding class.
    pub fn params(&self) -> (Kind, Rational, Rational) {
        use FamilyTag::*;
        match self {
            Fibonacci => (Kind::Phi, int(1), int(1)),
            Pell => (Kind::Phi, int(2), int(1)),
            Fermat => (Kind::Phi, int(3), int(-2)),
            ChebyshevU => (Kind::Phi, int(2), int(-1)),
            DicksonE(alpha) => (Kind::Phi, int(1), -alpha.clone()),
            Lucas => (Kind::Psi, int(1), int(1)),
            PellLucas => (Kind::Psi, int(2), int(1)),
            FermatLucas => (Kind::Psi, int(3), int(-2)),
            ChebyshevT => (Kind::Psi, int(2), int(-1)),
            DicksonD(alpha) => (Kind::Psi, int(1), -alpha.clone()),
        }
    }

    /// Display factor relating the classical polynomial to the class member.
    pub fn display_scale(&self) -> Rational {
        match self {
            FamilyTag::ChebyshevT => rat(1, 2),
            _ => Rational::one(),
        }
    }

    /// Classical index of the class member of degree `j` (`F_{j+1}` vs `L_j`).
    pub fn classical_index(&self, j: usize) -> usize {
        use FamilyTag::*;
        match self {
            Fibonacci | Pell | Fermat => j + 1,
            _ => j,
        }
    }

    pub fn symbol(&self) -> String {
        use FamilyTag::*;
        match self {
            Fibonacci => "F".into(),
            Pell => "P".into(),
            Fermat => "Fermat".into(),
            ChebyshevU => "U".into(),
            DicksonE(a) => format!("E^{a}"),
            Lucas => "L".into(),
            PellLucas => "Q".into(),
            FermatLucas => "f".into(),
            ChebyshevT => "T".into(),
            DicksonD(a) => format!("D^{a}"),
        }
    }

    /// The eight tags without a free parameter.
    pub fn fixed() -> [FamilyTag; 8] {
        use FamilyTag::*;
        [Fibonacci, Pell, Fermat, ChebyshevU, Lucas, PellLucas, FermatLucas, ChebyshevT]
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilyTag::*;
        match self {
            Fibonacci => write!(f, "fibonacci"),
            Pell => write!(f, "pell"),
            Fermat => write!(f, "fermat"),
            ChebyshevU => write!(f, "chebyshev-u"),
            DicksonE(a) => write!(f, "dickson-e:{a}"),
            Lucas => write!(f, "lucas"),
            PellLucas => write!(f, "pell-lucas"),
            FermatLucas => write!(f, "fermat-lucas"),
            ChebyshevT => write!(f, "chebyshev-t"),
            DicksonD(a) => write!(f, "dickson-d:{a}"),
        }
    }
}

impl FromStr for FamilyTag {
    type Err = Error;

    /// Accepts the `Display` names (case-insensitive, `_` or `-`), and
    /// `dickson-e:ALPHA` / `dickson-d:ALPHA`.
    fn from_str(s: &str) -> Result<FamilyTag> {
        use FamilyTag::*;
        let norm = s.trim().to_ascii_lowercase().replace('_', "-");
        if let Some((head, alpha)) = norm.split_once(':') {
            let alpha = parse_rational(alpha)?;
            if alpha.is_zero() {
                return Err(Error::ZeroParameter("alpha"));
            }
            return match head {
                "dickson-e" | "e" => Ok(DicksonE(alpha)),
                "dickson-d" | "d" => Ok(DicksonD(alpha)),
                _ => Err(Error::UnknownFamily(s.to_string())),
            };
        }
        Ok(match norm.as_str() {
            "fibonacci" | "f" => Fibonacci,
            "pell" | "p" => Pell,
            "fermat" => Fermat,
            "chebyshev-u" | "u" => ChebyshevU,
            "lucas" | "l" => Lucas,
            "pell-lucas" | "q" => PellLucas,
            "fermat-lucas" => FermatLucas,
            "chebyshev-t" | "t" => ChebyshevT,
            _ => return Err(Error::UnknownFamily(s.to_string())),
        })
    }
}

/// A generalized class: `φ^{a,b}` or `ψ^{a,b}` (the latter written `ψ^{r,s}` in
/// connection formulas), with an optional classical name.
#[derive(Clone, Debug)]
pub struct FamilyParams {
    pub kind: Kind,
    pub a: Rational,
    pub b: Rational,
    pub tag: Option<FamilyTag>,
}

impl FamilyParams {
    /// Both parameters must be nonzero.
    pub fn new(kind: Kind, a: Rational, b: Rational) -> Result<FamilyParams> {
        if a.is_zero() {
            return Err(Error::ZeroParameter("a"));
        }
        if b.is_zero() {
            return Err(Error::ZeroParameter("b"));
        }
        Ok(FamilyParams { kind, a, b, tag: None })
    }

    pub fn phi(a: Rational, b: Rational) -> Result<FamilyParams> {
        FamilyParams::new(Kind::Phi, a, b)
    }

    pub fn psi(a: Rational, b: Rational) -> Result<FamilyParams> {
        FamilyParams::new(Kind::Psi, a, b)
    }

    pub fn from_tag(tag: FamilyTag) -> FamilyParams {
        family_lookup(&tag)
    }

    /// Same parameters, other recurrence (drops the tag).
    pub fn with_kind(&self, kind: Kind) -> FamilyParams {
        FamilyParams { kind, a: self.a.clone(), b: self.b.clone(), tag: None }
    }

    pub fn same_class(&self, other: &FamilyParams) -> bool {
        self.kind == other.kind && self.a == other.a && self.b == other.b
    }

    /// Parses `KIND:A,B` (e.g. `psi:2,-1`) or a family name.
    pub fn parse(s: &str) -> Result<FamilyParams> {
        if let Some((kind, rest)) = s.split_once(':') {
            if let Ok(kind) = kind.parse::<Kind>() {
                let (a, b) = rest.split_once(',').ok_or_else(|| Error::Parse(s.to_string()))?;
                return FamilyParams::new(kind, parse_rational(a)?, parse_rational(b)?);
            }
        }
        Ok(FamilyParams::from_tag(s.parse()?))
    }
}

impl PartialEq for FamilyParams {
    fn eq(&self, other: &FamilyParams) -> bool {
        self.same_class(other)
    }
}

impl Eq for FamilyParams {}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{},{}", self.kind, self.a, self.b)
    }
}

/// The Table-of-special-cases row for `tag`.
pub fn family_lookup(tag: &FamilyTag) -> FamilyParams {
    let (kind, a, b) = tag.params();
    FamilyParams { kind, a, b, tag: Some(tag.clone()) }
}

/// `(a, b)` pairs of the classical rows, with Dickson at `α = 2`.
pub fn table_parameters() -> Vec<(Rational, Rational)> {
    vec![
        (int(1), int(1)),
        (int(2), int(1)),
        (int(3), int(-2)),
        (int(2), int(-1)),
        (int(1), int(-2)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lookup_rows() {
        let pell = family_lookup(&FamilyTag::Pell);
        assert_eq!((pell.kind, pell.a, pell.b), (Kind::Phi, int(2), int(1)));
        let fl = family_lookup(&FamilyTag::FermatLucas);
        assert_eq!((fl.kind, fl.a, fl.b), (Kind::Psi, int(3), int(-2)));
        let t = family_lookup(&FamilyTag::ChebyshevT);
        assert_eq!((t.kind, t.a.clone(), t.b.clone()), (Kind::Psi, int(2), int(-1)));
        assert_eq!(FamilyTag::ChebyshevT.display_scale(), rat(1, 2));
        let e = family_lookup(&FamilyTag::DicksonE(int(3)));
        assert_eq!((e.kind, e.a, e.b), (Kind::Phi, int(1), int(-3)));
    }

    #[test]
    fn parsing() {
        assert_eq!("pell-lucas".parse::<FamilyTag>().unwrap(), FamilyTag::PellLucas);
        assert_eq!("Chebyshev_T".parse::<FamilyTag>().unwrap(), FamilyTag::ChebyshevT);
        assert_eq!("dickson-d:1/2".parse::<FamilyTag>().unwrap(), FamilyTag::DicksonD(rat(1, 2)));
        assert!(matches!("jacobi".parse::<FamilyTag>(), Err(Error::UnknownFamily(_))));
        let p = FamilyParams::parse("psi:2,-1").unwrap();
        assert_eq!(p, FamilyParams::psi(int(2), int(-1)).unwrap());
        assert_eq!(FamilyParams::parse("fibonacci").unwrap(), FamilyParams::phi(int(1), int(1)).unwrap());
    }

    #[test]
    fn zero_parameters_rejected() {
        assert_eq!(FamilyParams::phi(int(0), int(1)), Err(Error::ZeroParameter("a")));
        assert_eq!(FamilyParams::psi(int(1), int(0)), Err(Error::ZeroParameter("b")));
    }

    #[test]
    fn roundtrip_names() {
        for tag in FamilyTag::fixed() {
            assert_eq!(tag.to_string().parse::<FamilyTag>().unwrap(), tag);
        }
    }
}
