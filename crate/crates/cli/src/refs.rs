use std::fmt;
use std::str::FromStr;

use anyhow::{bail, Context};
use odcodes::varieties::{
    flag_presentation, gaussian_binomial, grassmann_presentation, hermitian_counts, hermitian_presentation,
    hermitian_tangent_presentation,
};
use odcodes::{Limits, Presentation};

/// `herm:r:q`, `herm-tangent:dim:q`, `grass:k:n:q` or `flag:n:q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VarietyRef {
    Herm { r: u32, q: u32 },
    HermTangent { dim: u32, q: u32 },
    Grass { k: usize, n: usize, q: u32 },
    Flag { n: usize, q: u32 },
}

impl FromStr for VarietyRef {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> anyhow::Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        let num = |i: usize| -> anyhow::Result<u32> {
            parts[i].parse::<u32>().with_context(|| format!("bad number {:?} in variety reference {s:?}", parts[i]))
        };
        Ok(match (parts[0], parts.len()) {
            ("herm", 3) => VarietyRef::Herm { r: num(1)?, q: num(2)? },
            ("herm-tangent", 3) => VarietyRef::HermTangent { dim: num(1)?, q: num(2)? },
            ("grass", 4) => VarietyRef::Grass { k: num(1)? as usize, n: num(2)? as usize, q: num(3)? },
            ("flag", 3) => VarietyRef::Flag { n: num(1)? as usize, q: num(2)? },
            _ => {
                bail!("unknown variety reference {s:?}; expected herm:r:q, herm-tangent:dim:q, grass:k:n:q or flag:n:q")
            }
        })
    }
}

impl fmt::Display for VarietyRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            VarietyRef::Herm { r, q } => write!(f, "herm:{r}:{q}"),
            VarietyRef::HermTangent { dim, q } => write!(f, "herm-tangent:{dim}:{q}"),
            VarietyRef::Grass { k, n, q } => write!(f, "grass:{k}:{n}:{q}"),
            VarietyRef::Flag { n, q } => write!(f, "flag:{n}:{q}"),
        }
    }
}

impl VarietyRef {
    /// The verified presentation whose affine points carry the codes.
    pub fn presentation(&self, limits: &Limits) -> anyhow::Result<Presentation> {
        Ok(match *self {
            VarietyRef::Herm { r, q } => hermitian_presentation(r, q, limits)?,
            VarietyRef::HermTangent { dim, q } => hermitian_tangent_presentation(dim, q, limits)?,
            VarietyRef::Grass { k, n, q } => grassmann_presentation(k, n, q, limits)?.0,
            VarietyRef::Flag { n, q } => {
                let d = flag_presentation(n, q, limits)?;
                match d.presentation {
                    Some(p) => p,
                    None => bail!("no presentation for {self}: {}", d.failure.unwrap_or_default()),
                }
            }
        })
    }

    /// Expected number of affine points of the presentation's ideal.
    pub fn expected_points(&self) -> u64 {
        match *self {
            VarietyRef::Herm { r: 1, q } => (q as u64).pow(3),
            VarietyRef::Herm { r, q } => hermitian_counts(r, q as u64).affine,
            VarietyRef::HermTangent { dim, q } => (q as u64).pow(2 * dim + 1),
            VarietyRef::Grass { k, n, q } => 1 + (q as u64 - 1) * gaussian_binomial(n as u32, k as u32, q as u64),
            VarietyRef::Flag { n, q } => {
                let q = q as u64;
                let n = n as u32;
                q.pow(2 * n - 1) + q.pow(n) - q.pow(n - 1)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        for s in ["herm:2:3", "herm-tangent:1:4", "grass:3:5:2", "flag:4:3"] {
            assert_eq!(s.parse::<VarietyRef>().unwrap().to_string(), s);
        }
        assert!("herm:2".parse::<VarietyRef>().is_err());
        assert!("grass:a:5:2".parse::<VarietyRef>().is_err());
    }
}
