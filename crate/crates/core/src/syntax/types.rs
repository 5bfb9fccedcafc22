use std::fmt;
use std::sync::Arc;

/// Simple types over booleans, naturals, lists, products and arrows.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Type {
    Var(Arc<str>),
    Bool,
    Nat,
    List(Arc<Type>),
    Arrow(Arc<Type>, Arc<Type>),
    Prod(Arc<Type>, Arc<Type>),
}

impl Type {
    pub fn var(name: &str) -> Type {
        Type::Var(name.into())
    }

    pub fn list(elem: Type) -> Type {
        Type::List(Arc::new(elem))
    }

    pub fn arrow(dom: Type, cod: Type) -> Type {
        Type::Arrow(Arc::new(dom), Arc::new(cod))
    }

    pub fn prod(left: Type, right: Type) -> Type {
        Type::Prod(Arc::new(left), Arc::new(right))
    }

    /// `a1 -> a2 -> ... -> cod`
    pub fn arrows<I>(doms: I, cod: Type) -> Type
    where
        I: IntoIterator<Item = Type>,
        I::IntoIter: DoubleEndedIterator,
    {
        doms.into_iter()
            .rev()
            .fold(cod, |acc, dom| Type::arrow(dom, acc))
    }

    pub fn as_arrow(&self) -> Option<(&Type, &Type)> {
        match self {
            Type::Arrow(d, c) => Some((d, c)),
            _ => None,
        }
    }

    pub fn list_elem(&self) -> Option<&Type> {
        match self {
            Type::List(e) => Some(e),
            _ => None,
        }
    }
}

impl fmt::Debug for Type {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
