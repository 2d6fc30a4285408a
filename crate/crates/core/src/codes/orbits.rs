use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{primitive_element, FieldElement};
use crate::varieties::PointSet;

/// Orbits of a diagonal map `x_i -> c_i x_i` acting on a point set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitDecomposition {
    pub map: String,
    /// Order of the map as a group element.
    pub group_order: u32,
    /// Point indices of each orbit, orbits listed by their least index.
    pub orbits: Vec<Vec<usize>>,
    /// Orbit size -> number of orbits.
    pub histogram: BTreeMap<usize, usize>,
}

/// Orbits of `(x_1, ..., x_(s-1), y) -> (a x_1, ..., a x_(s-1), a^(q+1) y)`
/// where `a` is the primitive element of `GF(q^2)`.
pub fn orbit_decomposition(points: &PointSet, q: u32) -> Result<OrbitDecomposition> {
    let f = &points.field;
    if f.size() as u64 != (q as u64).pow(2) {
        return Err(Error::Invalid(format!("points are not over GF({q}^2)")));
    }
    if points.dim == 0 {
        return Err(Error::Invalid("zero-dimensional points".into()));
    }
    let a = primitive_element(f);
    let a_q1 = f.pow(a, q as i64 + 1)?;
    let mut mult = vec![a; points.dim - 1];
    mult.push(a_q1);
    let mut names: Vec<String> = (1..points.dim).map(|i| format!("a*x{i}")).collect();
    names.push(format!("a^{}*y", q + 1));
    orbit_decomposition_with(points, &mult, &format!("({})", names.join(", ")))
}

/// Orbits under the diagonal map with multipliers `mult`.
pub fn orbit_decomposition_with(
    points: &PointSet,
    mult: &[FieldElement],
    description: &str,
) -> Result<OrbitDecomposition> {
    let f = &points.field;
    if mult.len() != points.dim {
        return Err(Error::Dimension("one multiplier per coordinate".into()));
    }
    if mult.iter().any(|&c| !f.owns(c) || c.is_zero()) {
        return Err(Error::Invalid("multipliers must be nonzero elements of the point field".into()));
    }
    let group_order = mult.iter().map(|&c| f.order(c)).try_fold(1u32, |acc, o| o.map(|o| lcm(acc, o)))?;
    let index: HashMap<&[FieldElement], usize> =
        points.points.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
    let apply = |p: &[FieldElement]| -> Vec<FieldElement> { p.iter().zip(mult).map(|(&x, &c)| f.mul(x, c)).collect() };
    let mut seen = vec![false; points.len()];
    let mut orbits = Vec::new();
    for start in 0..points.len() {
        if seen[start] {
            continue;
        }
        let mut orbit = vec![start];
        seen[start] = true;
        let mut cur = apply(&points.points[start]);
        loop {
            let Some(&j) = index.get(cur.as_slice()) else {
                return Err(Error::Invalid(format!("point {start} is not mapped into the point set")));
            };
            if j == start {
                break;
            }
            seen[j] = true;
            orbit.push(j);
            cur = apply(&cur);
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    let mut histogram = BTreeMap::new();
    for o in &orbits {
        *histogram.entry(o.len()).or_insert(0) += 1;
    }
    Ok(OrbitDecomposition { map: description.to_string(), group_order, orbits, histogram })
}

fn lcm(a: u32, b: u32) -> u32 {
    fn gcd(a: u32, b: u32) -> u32 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}
