use domlab::{Certificate, Problem, SolveStats, Solution, VertexSet};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunStats {
    pub candidate_family_sizes: Vec<usize>,
    pub product_dims: Vec<[usize; 3]>,
    pub elapsed_ms: f64,
    pub scalar_op_count: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    pub algo: String,
    pub seed: Option<u64>,
    pub threads: usize,
}

/// Everything `solve` reports. `answer` is true exactly when `solution` is set.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunResult {
    pub answer: bool,
    pub problem: Problem,
    pub solution: Option<Vec<usize>>,
    pub certificate: Certificate,
    pub stats: RunStats,
    pub config: RunConfig,
}

impl RunResult {
    pub fn new(problem: Problem, found: Option<Solution>, stats: SolveStats, elapsed_ms: f64, config: RunConfig) -> Self {
        let (problem, solution, certificate) = match found {
            Some(s) => (s.problem, Some(s.vertices.into_vec()), s.certificate),
            None => (problem, None, Certificate::None),
        };
        Self {
            answer: solution.is_some(),
            problem,
            solution,
            certificate,
            stats: RunStats {
                candidate_family_sizes: stats.family_sizes,
                product_dims: stats.product_dims,
                elapsed_ms,
                scalar_op_count: stats.scalar_ops,
            },
            config,
        }
    }

    pub fn to_solution(&self) -> Option<Solution> {
        let vertices = VertexSet::from_unsorted(self.solution.clone()?);
        Some(Solution::new(self.problem.clone(), vertices).with_certificate(self.certificate.clone()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("result serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = match &self.solution {
            Some(s) => format!("YES {s:?}\n"),
            None => "NO\n".to_string(),
        };
        if self.certificate != Certificate::None {
            out += &format!("certificate: {}\n", serde_json::to_string(&self.certificate).expect("certificate serializes"));
        }
        let s = &self.stats;
        if !s.candidate_family_sizes.is_empty() {
            out += &format!("families: {:?}\n", s.candidate_family_sizes);
        }
        for [a, b, c] in &s.product_dims {
            out += &format!("product: {a} x {b} x {c}\n");
        }
        out += &format!(
            "scalar ops: {}, elapsed: {:.3} ms, algo: {}, threads: {}\n",
            s.scalar_op_count, s.elapsed_ms, self.config.algo, self.config.threads
        );
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use domlab::DominationVariant;

    #[test]
    fn no_answer_has_no_solution() {
        let problem = Problem::Multidom { k: 2, r: 1, variant: DominationVariant::Tuple };
        let config = RunConfig { algo: "fast".into(), seed: None, threads: 1 };
        let result = RunResult::new(problem, None, SolveStats::default(), 0.0, config);
        assert!(!result.answer && result.to_solution().is_none());
        let back: RunResult = serde_json::from_str(&result.to_json()).unwrap();
        assert_eq!(back, result);
        assert!(result.to_text().starts_with("NO\n"));
    }
}
