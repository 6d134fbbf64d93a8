use crate::Int;

/// `a_n + b_n·√2 = (3 + 2√2)^n`, advanced by `(a, b) → (3a + 4b, 2a + 3b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PellState {
    pub a: Int,
    pub b: Int,
    pub n: u64,
}

impl PellState {
    pub fn new() -> Self {
        Self { a: 3.into(), b: 2.into(), n: 1 }
    }

    pub fn advance(&mut self) {
        let a = &self.a * 3 + &self.b * 4;
        let b = &self.a * 2 + &self.b * 3;
        self.a = a;
        self.b = b;
        self.n += 1;
    }

    /// State at index `n ≥ 1`.
    pub fn at(n: u64) -> Self {
        assert!(n >= 1, "Pell index starts at 1");
        let mut s = Self::new();
        while s.n < n {
            s.advance();
        }
        s
    }

    pub fn norm(&self) -> Int {
        &self.a * &self.a - &self.b * &self.b * 2
    }
}

impl Default for PellState {
    fn default() -> Self {
        Self::new()
    }
}

impl Iterator for PellState {
    type Item = (u64, Int, Int);

    fn next(&mut self) -> Option<Self::Item> {
        let item = (self.n, self.a.clone(), self.b.clone());
        self.advance();
        Some(item)
    }
}
