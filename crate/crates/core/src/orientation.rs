use std::fmt;
use std::sync::Arc;

use crate::error::Result;
use crate::weyl::{check_permutation, WeylElement, WeylGroup};
use crate::CartanMatrix;

/// A Cartan matrix with an ordering of the simple reflections, fixing the
/// Coxeter element c = s_{order[0]} ··· s_{order[n-1]}.
#[derive(Clone)]
pub struct Orientation {
    group: Arc<WeylGroup>,
    order: Vec<usize>,
    coxeter: WeylElement,
}

impl Orientation {
    pub fn new(group: Arc<WeylGroup>, order: Vec<usize>) -> Result<Self> {
        check_permutation(&order, group.rank())?;
        let coxeter = group.coxeter_element(&order)?;
        Ok(Orientation { group, order, coxeter })
    }

    /// The default order 1, 2, ..., n.
    pub fn standard(cartan: CartanMatrix) -> Self {
        let n = cartan.rank();
        Self::new(Arc::new(WeylGroup::new(cartan)), (0..n).collect()).expect("identity permutation")
    }

    pub fn group(&self) -> &WeylGroup {
        &self.group
    }

    pub fn shared_group(&self) -> Arc<WeylGroup> {
        self.group.clone()
    }

    pub fn cartan(&self) -> &CartanMatrix {
        self.group.cartan()
    }

    pub fn rank(&self) -> usize {
        self.order.len()
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn coxeter(&self) -> &WeylElement {
        &self.coxeter
    }

    /// First letter of c.
    pub fn source(&self) -> usize {
        self.order[0]
    }

    /// Last letter of c.
    pub fn sink(&self) -> usize {
        self.order[self.order.len() - 1]
    }

    /// Same group, different order.
    pub fn reordered(&self, order: Vec<usize>) -> Result<Self> {
        Self::new(self.group.clone(), order)
    }
}

impl fmt::Debug for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let order: Vec<String> = self.order.iter().map(|i| (i + 1).to_string()).collect();
        write!(f, "Orientation({:?}, order {})", self.cartan(), order.join(","))
    }
}
