use std::sync::Arc;

use super::Cocycle2;
use crate::abelian::FiniteAbelian;
use crate::error::{Error, Result};
use crate::group::{decompose_abelian, FiniteGroup, GroupHom, GroupRef, Subgroup};

/// `1 -> A -> E -> G -> 1` with `A` central in `E`.
#[derive(Debug, Clone)]
pub struct CentralExtension {
    total: GroupRef,
    projection: GroupHom,
    kernel: FiniteAbelian,
    /// `kernel_embedding[i]`: element of `E` for the `i`-th element of `A`
    /// (indexed as in [`FiniteAbelian::index_of`]).
    kernel_embedding: Vec<usize>,
}

impl CentralExtension {
    /// Checks that the embedding is an injective homomorphism onto the kernel
    /// of the projection and that its image is central.
    pub fn new(projection: GroupHom, kernel: FiniteAbelian, kernel_embedding: Vec<usize>) -> Result<Self> {
        let total = projection.source().clone();
        if kernel_embedding.len() as u64 != kernel.order() {
            return Err(Error::InvalidExtension("embedding length differs from |A|".into()));
        }
        let a_group = Arc::new(kernel.to_group());
        let emb = GroupHom::new(a_group, total.clone(), kernel_embedding.clone())
            .map_err(|_| Error::InvalidExtension("kernel embedding is not a homomorphism".into()))?;
        let ker = projection.kernel();
        let mut image = emb.images().to_vec();
        image.sort_unstable();
        image.dedup();
        if image.len() != kernel_embedding.len() {
            return Err(Error::InvalidExtension("kernel embedding is not injective".into()));
        }
        if image != ker.members() {
            return Err(Error::InvalidExtension("image of A differs from the kernel".into()));
        }
        if projection.image_subgroup().order() != projection.target().order() {
            return Err(Error::InvalidExtension("projection is not surjective".into()));
        }
        for &a in &image {
            if total.elements().any(|x| total.mul(a, x) != total.mul(x, a)) {
                return Err(Error::InvalidExtension(format!("kernel element {a} is not central")));
            }
        }
        Ok(Self {
            total,
            projection,
            kernel,
            kernel_embedding,
        })
    }

    /// Builds the extension data from a surjection with central kernel,
    /// putting the kernel into invariant-factor form.
    pub fn from_projection(projection: GroupHom) -> Result<Self> {
        let ker: Subgroup = projection.kernel();
        let (kg, incl) = ker.to_group();
        if !kg.is_abelian() {
            return Err(Error::InvalidExtension("kernel is not abelian".into()));
        }
        let dec = decompose_abelian(&kg)?;
        let embedding = dec.element_of.iter().map(|&x| incl.apply(x)).collect();
        Self::new(projection, dec.group, embedding)
    }

    pub fn total(&self) -> &GroupRef {
        &self.total
    }

    pub fn base(&self) -> &GroupRef {
        self.projection.target()
    }

    pub fn projection(&self) -> &GroupHom {
        &self.projection
    }

    pub fn kernel(&self) -> &FiniteAbelian {
        &self.kernel
    }

    pub fn kernel_embedding(&self) -> &[usize] {
        &self.kernel_embedding
    }

    pub fn embed(&self, a: &[u64]) -> usize {
        self.kernel_embedding[self.kernel.index_of(a)]
    }

    /// Kernel coordinates of an element of `E` lying over the identity.
    pub fn kernel_coords(&self, x: usize) -> Option<Vec<u64>> {
        self.kernel_embedding
            .iter()
            .position(|&e| e == x)
            .map(|i| self.kernel.element(i))
    }

    /// Minimal-index preimage of every base element.
    pub fn section(&self) -> Vec<usize> {
        let mut s = vec![usize::MAX; self.base().order()];
        for x in self.total.elements() {
            let g = self.projection.apply(x);
            if s[g] == usize::MAX {
                s[g] = x;
            }
        }
        s
    }
}

/// Total group `A x G` with `(a, g)(b, h) = (a + b + f(g, h), gh)`; the pair
/// `(a, g)` has index `index_of(a) + |A| g`.
pub fn extension_from_cocycle(f: &Cocycle2) -> CentralExtension {
    let g = f.group();
    let a = f.coefficients();
    let m = a.order() as usize;
    let n = g.order();
    let elems: Vec<Vec<u64>> = a.elements().collect();
    let total = Arc::new(FiniteGroup::from_fn(
        m * n,
        |x, y| {
            let (ai, gi) = (x % m, x / m);
            let (bi, hi) = (y % m, y / m);
            let s = a.add(&a.add(&elems[ai], &elems[bi]), f.value(gi, hi));
            a.index_of(&s) + m * g.mul(gi, hi)
        },
        None,
    ));
    let projection = GroupHom::new_unchecked(total.clone(), g.clone(), (0..m * n).map(|x| x / m).collect());
    CentralExtension {
        total,
        projection,
        kernel: a.clone(),
        kernel_embedding: (0..m).collect(),
    }
}

/// `f(g, h) = s(g) s(h) s(gh)^-1` for the minimal-index section `s`.
pub fn cocycle_from_extension(e: &CentralExtension) -> Cocycle2 {
    let s = e.section();
    let g = e.base();
    let t = e.total();
    let n = g.order();
    let mut lookup = vec![usize::MAX; t.order()];
    for (i, &x) in e.kernel_embedding.iter().enumerate() {
        lookup[x] = i;
    }
    let mut values = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            let k = t.mul(t.mul(s[x], s[y]), t.inv(s[g.mul(x, y)]));
            values.push(e.kernel.element(lookup[k]));
        }
    }
    Cocycle2::from_flat(g.clone(), e.kernel.clone(), values)
}
