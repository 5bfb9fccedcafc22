use super::term::Var;

/// Source of fresh indices for renamed variables and new assumptions.
///
/// Each draw returns the current counter and bumps it, so indices handed out
/// by one supply never repeat.
#[derive(Debug, Clone, Default)]
pub struct NameSupply {
    next: u64,
}

impl NameSupply {
    pub fn new() -> Self {
        NameSupply { next: 0 }
    }

    pub fn starting_at(next: u64) -> Self {
        NameSupply { next }
    }

    pub fn peek(&self) -> u64 {
        self.next
    }

    pub fn draw(&mut self) -> u64 {
        let index = self.next;
        self.next += 1;
        index
    }

    /// Make sure every later draw is strictly above `index`.
    pub fn reserve(&mut self, index: u64) {
        self.next = self.next.max(index.saturating_add(1));
    }

    /// A variable with the same name and type as `like` but a new index.
    pub fn fresh_var(&mut self, like: &Var) -> Var {
        Var::new(like.name(), self.draw(), like.ty().clone())
    }

    /// Like [`fresh_var`](Self::fresh_var), skipping any candidate for which
    /// `taken` holds.
    pub fn fresh_var_avoiding(&mut self, like: &Var, taken: impl Fn(&Var) -> bool) -> Var {
        loop {
            let v = self.fresh_var(like);
            if !taken(&v) {
                return v;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::Type;

    #[test]
    fn draws_are_strictly_increasing() {
        let mut s = NameSupply::new();
        let a = s.draw();
        let b = s.draw();
        s.reserve(10);
        let c = s.draw();
        s.reserve(3);
        let d = s.draw();
        assert!(a < b && b < c && c < d);
        assert_eq!(c, 11);
    }

    #[test]
    fn avoiding_skips_taken() {
        let mut s = NameSupply::new();
        let x = Var::new("x", 7, Type::Nat);
        let v = s.fresh_var_avoiding(&x, |v| v.index() < 3);
        assert_eq!(v.index(), 3);
        assert_eq!(v.name(), "x");
        assert_eq!(v.ty(), &Type::Nat);
    }
}
