use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `k` sets of `d`-dimensional 0/1 vectors. `sets[i][a][t]` is coordinate
/// `t` of vector `a` in set `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawOV", into = "RawOV")]
pub struct OVInstance {
    pub k: usize,
    pub d: usize,
    pub sets: Vec<Vec<Vec<bool>>>,
}

#[derive(Serialize, Deserialize)]
struct RawOV {
    k: usize,
    d: usize,
    sets: Vec<Vec<String>>,
}

impl TryFrom<RawOV> for OVInstance {
    type Error = Error;

    fn try_from(raw: RawOV) -> Result<Self> {
        if raw.sets.len() != raw.k {
            return Err(Error::Format(format!("expected {} sets, found {}", raw.k, raw.sets.len())));
        }
        let sets = raw
            .sets
            .iter()
            .map(|set| set.iter().map(|s| parse_bits(s, raw.d)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        OVInstance::new(raw.d, sets)
    }
}

impl From<OVInstance> for RawOV {
    fn from(inst: OVInstance) -> Self {
        let sets = inst
            .sets
            .iter()
            .map(|set| set.iter().map(|v| v.iter().map(|&b| if b { '1' } else { '0' }).collect()).collect())
            .collect();
        RawOV { k: inst.k, d: inst.d, sets }
    }
}

fn parse_bits(s: &str, d: usize) -> Result<Vec<bool>> {
    if s.len() != d {
        return Err(Error::Format(format!("vector {s:?} has {} bits, expected {d}", s.len())));
    }
    s.chars()
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            other => Err(Error::Format(format!("bad bit {other:?} in {s:?}"))),
        })
        .collect()
}

impl OVInstance {
    pub fn new(d: usize, sets: Vec<Vec<Vec<bool>>>) -> Result<Self> {
        let k = sets.len();
        if k < 2 || d < 1 {
            return Err(Error::invalid(format!("OV instance needs k >= 2 and d >= 1, got k={k}, d={d}")));
        }
        if let Some(v) = sets.iter().flatten().find(|v| v.len() != d) {
            return Err(Error::Format(format!("vector of length {} in a {d}-dimensional instance", v.len())));
        }
        Ok(Self { k, d, sets })
    }

    /// Builds an instance from bit strings such as `"0101"`.
    pub fn from_strings<S: AsRef<str>>(d: usize, sets: &[Vec<S>]) -> Result<Self> {
        let sets = sets
            .iter()
            .map(|set| set.iter().map(|s| parse_bits(s.as_ref(), d)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::new(d, sets)
    }

    /// `k` sets of `size` vectors; every bit is zero with probability `zero`.
    pub fn random<R: Rng>(k: usize, d: usize, size: usize, zero: f64, rng: &mut R) -> Result<Self> {
        let sets = (0..k).map(|_| (0..size).map(|_| (0..d).map(|_| !rng.gen_bool(zero)).collect()).collect()).collect();
        Self::new(d, sets)
    }

    pub fn total_vectors(&self) -> usize {
        self.sets.iter().map(Vec::len).sum()
    }
}

/// True when some choice of one vector per set leaves at least `r` zeros in
/// every coordinate.
pub fn solve_ov_bruteforce(instance: &OVInstance, r: usize) -> bool {
    crate::oracles::scan_ov(instance, r).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let text = r#"{"k":2,"d":3,"sets":[["010","111"],["101"]]}"#;
        let inst: OVInstance = serde_json::from_str(text).unwrap();
        assert_eq!(inst.sets[0][0], vec![false, true, false]);
        assert_eq!(serde_json::to_string(&inst).unwrap(), text);
        assert!(serde_json::from_str::<OVInstance>(r#"{"k":2,"d":3,"sets":[["01"],["101"]]}"#).is_err());
        assert!(serde_json::from_str::<OVInstance>(r#"{"k":3,"d":1,"sets":[["0"],["1"]]}"#).is_err());
    }

    #[test]
    fn examples() {
        let inst = OVInstance::from_strings(2, &[vec!["01"], vec!["10"]]).unwrap();
        assert!(solve_ov_bruteforce(&inst, 1));
        let ones = OVInstance::from_strings(3, &[vec!["111"], vec!["111"], vec!["111"]]).unwrap();
        assert!(!solve_ov_bruteforce(&ones, 1));
        let zeros = OVInstance::from_strings(2, &[vec!["00"], vec!["00"], vec!["00"]]).unwrap();
        assert!(solve_ov_bruteforce(&zeros, 2));
    }
}
