use std::collections::BTreeMap;
use std::fmt;

use serde::de::{MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::matrix::IntMatrix;
use super::poly::divisor_candidates;

/// Multiset of integer eigenvalues.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Spectrum {
    mult: BTreeMap<i64, usize>,
}

impl Spectrum {
    pub fn new() -> Self {
        Spectrum::default()
    }

    pub fn from_pairs(pairs: &[(i64, usize)]) -> Self {
        let mut s = Spectrum::new();
        for &(v, m) in pairs {
            s.insert(v, m);
        }
        s
    }

    pub fn from_eigenvalues(values: &[i64]) -> Self {
        let mut s = Spectrum::new();
        for &v in values {
            s.insert(v, 1);
        }
        s
    }

    pub fn insert(&mut self, value: i64, count: usize) {
        if count > 0 {
            *self.mult.entry(value).or_insert(0) += count;
        }
    }

    pub fn multiplicity(&self, value: i64) -> usize {
        self.mult.get(&value).copied().unwrap_or(0)
    }

    /// Total multiplicity, the order of the matrix.
    pub fn total(&self) -> usize {
        self.mult.values().sum()
    }

    pub fn max(&self) -> Option<i64> {
        self.mult.keys().next_back().copied()
    }

    pub fn min(&self) -> Option<i64> {
        self.mult.keys().next().copied()
    }

    pub fn distinct_count(&self) -> usize {
        self.mult.len()
    }

    /// `Σ λ^p m_λ`, the trace of the `p`-th matrix power.
    pub fn power_sum(&self, p: u32) -> i128 {
        self.mult.iter().map(|(&v, &m)| (v as i128).pow(p) * m as i128).sum()
    }

    /// `(eigenvalue, multiplicity)` pairs, largest eigenvalue first.
    pub fn iter_desc(&self) -> impl Iterator<Item = (i64, usize)> + '_ {
        self.mult.iter().rev().map(|(&v, &m)| (v, m))
    }

    /// All eigenvalues with repetition, largest first.
    pub fn eigenvalues_desc(&self) -> Vec<i64> {
        self.iter_desc().flat_map(|(v, m)| std::iter::repeat(v).take(m)).collect()
    }

    /// Multiplicities of the given eigenvalues, in order.
    pub fn multiplicity_vector(&self, values: &[i64]) -> Vec<usize> {
        values.iter().map(|&v| self.multiplicity(v)).collect()
    }

    /// True when every eigenvalue lies in `lo..=hi`.
    pub fn within(&self, lo: i64, hi: i64) -> bool {
        self.mult.keys().all(|&v| lo <= v && v <= hi)
    }
}

impl fmt::Debug for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.iter_desc()).finish()
    }
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .iter_desc()
            .map(|(v, m)| if m == 1 { v.to_string() } else { format!("{v}^{m}") })
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

impl Serialize for Spectrum {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.mult.len()))?;
        for (v, m) in self.iter_desc() {
            map.serialize_entry(&v.to_string(), &m)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for Spectrum {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = Spectrum;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a map from eigenvalue strings to multiplicities")
            }
            fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> Result<Spectrum, A::Error> {
                let mut s = Spectrum::new();
                while let Some((k, m)) = access.next_entry::<String, usize>()? {
                    let v: i64 = k.parse().map_err(serde::de::Error::custom)?;
                    s.insert(v, m);
                }
                Ok(s)
            }
        }
        d.deserialize_map(V)
    }
}

/// `n - rank(M - kI)`.
pub fn multiplicity(m: &IntMatrix, k: i64) -> usize {
    m.order() - m.minus_scalar(k).rank()
}

/// The full spectrum when every eigenvalue is an integer.
///
/// Candidates are the divisors of the lowest nonzero coefficient of the
/// characteristic polynomial, limited by the largest absolute row sum.
pub fn integral_spectrum(m: &IntMatrix) -> Option<Spectrum> {
    let n = m.order();
    let mut spec = Spectrum::new();
    if n == 0 {
        return Some(spec);
    }
    let zero = n - m.rank();
    spec.insert(0, zero);
    if zero == n {
        return Some(spec);
    }
    let cp = m.char_poly();
    let trailing = &cp.coeffs()[cp.zero_multiplicity()];
    for k in divisor_candidates(trailing, m.gershgorin_bound()) {
        if cp.eval(k) != 0.into() {
            continue;
        }
        spec.insert(k, multiplicity(m, k));
        if spec.total() == n {
            return Some(spec);
        }
    }
    None
}

/// Outcome of an interlacing comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct InterlaceReport {
    pub holds: bool,
    pub tight: bool,
}

/// Checks `θ_i(sup) >= θ_i(sub) >= θ_{n-m+i}(sup)` for eigenvalue lists in any order.
pub fn interlaces<T: Ord + Clone>(sub: &[T], sup: &[T]) -> InterlaceReport {
    let (m, n) = (sub.len(), sup.len());
    if m > n {
        return InterlaceReport {
            holds: false,
            tight: false,
        };
    }
    let mut a = sub.to_vec();
    let mut b = sup.to_vec();
    a.sort_by(|x, y| y.cmp(x));
    b.sort_by(|x, y| y.cmp(x));
    let holds = (0..m).all(|i| b[i] >= a[i] && a[i] >= b[n - m + i]);
    // tight: a prefix matches the top of sup and the rest matches the bottom
    let top = (0..m).take_while(|&i| a[i] == b[i]).count();
    let bottom = (0..m).rev().take_while(|&i| a[i] == b[n - m + i]).count();
    let tight = holds && top + bottom >= m;
    InterlaceReport { holds, tight }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn complete_graph_spectrum() {
        let k4 = Graph::complete(4).unwrap().adjacency_matrix();
        assert_eq!(integral_spectrum(&k4), Some(Spectrum::from_pairs(&[(3, 1), (-1, 3)])));
        assert_eq!(multiplicity(&k4, 0), 0);
    }

    #[test]
    fn pentagon_is_not_integral() {
        let c5 = Graph::cycle(5).unwrap().adjacency_matrix();
        assert_eq!(integral_spectrum(&c5), None);
    }

    #[test]
    fn petersen_multiplicities() {
        let p = Graph::petersen().adjacency_matrix();
        assert_eq!(multiplicity(&p, 1), 5);
        let s = integral_spectrum(&p).unwrap();
        assert_eq!(s.multiplicity_vector(&[3, 2, 1, 0, -1, -2]), vec![1, 0, 5, 0, 0, 4]);
        assert_eq!(s.power_sum(2), 30);
    }

    #[test]
    fn json_form_uses_string_keys_largest_first() {
        let s = Spectrum::from_pairs(&[(-1, 3), (3, 1)]);
        let text = serde_json::to_string(&s).unwrap();
        assert_eq!(text, r#"{"3":1,"-1":3}"#);
        let back: Spectrum = serde_json::from_str(&text).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn interlacing_cases() {
        let r = interlaces(&[2, -1, -1], &[3, -1, -1, -1]);
        assert!(r.holds);
        let r = interlaces(&[5, 0], &[5, 3, 2, 2, 0]);
        assert!(r.holds && r.tight);
        let r = interlaces(&[4], &[3, 1]);
        assert!(!r.holds);
        let r = interlaces(&[4, 1], &[5, 3, 2, 0]);
        assert!(r.holds && !r.tight);
    }
}
