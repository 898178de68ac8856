use serde::Serialize;

/// Outcome of one named check, with the lexicographically first failing tuple.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Vec<usize>>,
}

impl Check {
    pub fn pass(name: &str) -> Self {
        Self {
            name: name.to_string(),
            passed: true,
            counterexample: None,
        }
    }

    pub fn fail(name: &str, counterexample: Vec<usize>) -> Self {
        Self {
            name: name.to_string(),
            passed: false,
            counterexample: Some(counterexample),
        }
    }

    /// Runs `test` over `tuples` in order and records the first failure.
    pub fn run<I>(name: &str, tuples: I, mut test: impl FnMut(&[usize]) -> bool) -> Self
    where
        I: IntoIterator<Item = Vec<usize>>,
    {
        for t in tuples {
            if !test(&t) {
                return Self::fail(name, t);
            }
        }
        Self::pass(name)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub(crate) fn push(&mut self, c: Check) {
        self.checks.push(c);
    }
}

/// All tuples in `0..n1 x 0..n2 x ...`, last coordinate fastest.
pub(crate) fn tuples(dims: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
    let total: usize = dims.iter().product();
    (0..total).map(move |mut i| {
        let mut t = vec![0; dims.len()];
        for (slot, &d) in t.iter_mut().zip(dims).rev() {
            *slot = i % d;
            i /= d;
        }
        t
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tuple_order_is_lexicographic() {
        let v: Vec<Vec<usize>> = tuples(&[2, 3]).collect();
        assert_eq!(v[0], vec![0, 0]);
        assert_eq!(v[1], vec![0, 1]);
        assert_eq!(v[3], vec![1, 0]);
        assert_eq!(v.len(), 6);
    }

    #[test]
    fn first_failure_is_reported() {
        let c = Check::run("odd", tuples(&[4]), |t| t[0] < 2);
        assert_eq!(c.counterexample, Some(vec![2]));
    }
}
