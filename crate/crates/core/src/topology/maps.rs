use serde::Serialize;

use super::SpectralSpace;
use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// A map of finite spaces given by its point table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralMap {
    source: SpectralSpace,
    target: SpectralSpace,
    points: Vec<usize>,
}

/// Topological properties of a [`SpectralMap`].
///
/// `open` and `closed` are relative to the image: `f(U)` must be open (closed)
/// in the subspace `f(X)`. The `_into_target` variants ask for openness
/// (closedness) in the whole target.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MapProps {
    pub continuous: bool,
    pub order_preserving: bool,
    pub open: bool,
    pub open_into_target: bool,
    pub closed: bool,
    pub closed_into_target: bool,
    pub injective: bool,
    pub surjective: bool,
    pub dense_image: bool,
    pub embedding: bool,
    pub homeomorphism: bool,
}

impl SpectralMap {
    pub fn new(source: SpectralSpace, target: SpectralSpace, points: Vec<usize>) -> Result<Self> {
        if points.len() != source.len() {
            return Err(Error::InvalidArgument(format!(
                "point table has {} entries for a {}-point source",
                points.len(),
                source.len()
            )));
        }
        if let Some(&p) = points.iter().find(|&&p| p >= target.len()) {
            return Err(Error::InvalidArgument(format!("image point {p} outside the target")));
        }
        Ok(SpectralMap { source, target, points })
    }

    pub fn identity(space: SpectralSpace) -> Self {
        let points = (0..space.len()).collect();
        SpectralMap { source: space.clone(), target: space, points }
    }

    pub fn source(&self) -> &SpectralSpace {
        &self.source
    }

    pub fn target(&self) -> &SpectralSpace {
        &self.target
    }

    pub fn table(&self) -> &[usize] {
        &self.points
    }

    pub fn apply(&self, p: usize) -> usize {
        self.points[p]
    }

    pub fn image_of(&self, pts: BitSet) -> BitSet {
        pts.iter().map(|p| self.points[p]).collect()
    }

    pub fn preimage_of(&self, pts: BitSet) -> BitSet {
        (0..self.source.len()).filter(|&p| pts.contains(self.points[p])).collect()
    }

    pub fn image(&self) -> BitSet {
        self.image_of(self.source.all())
    }

    /// Preimages of the basic opens `down(y)` are open. Every open set is a
    /// union of these, and preimages commute with unions.
    pub fn is_continuous(&self) -> bool {
        (0..self.target.len()).all(|y| self.source.is_open(self.preimage_of(self.target.down(y))))
    }

    pub fn is_order_preserving(&self) -> bool {
        (0..self.source.len()).all(|x| {
            self.source.up(x).iter().all(|x2| self.target.leq(self.points[x], self.points[x2]))
        })
    }

    pub fn is_injective(&self) -> bool {
        self.image().len() == self.source.len()
    }

    pub fn props(&self) -> MapProps {
        let image = self.image();
        let t = &self.target;
        // down-set (up-set) inside the subspace `image` with the restricted order
        let rel_open = |set: BitSet| set.iter().all(|y| (t.down(y) & image).is_subset(set));
        let rel_closed = |set: BitSet| set.iter().all(|y| (t.up(y) & image).is_subset(set));
        let n = self.source.len();
        let open = (0..n).all(|x| rel_open(self.image_of(self.source.down(x))));
        let open_into_target = (0..n).all(|x| t.is_open(self.image_of(self.source.down(x))));
        let closed = (0..n).all(|x| rel_closed(self.image_of(self.source.up(x))));
        let closed_into_target = (0..n).all(|x| t.is_closed(self.image_of(self.source.up(x))));
        let continuous = self.is_continuous();
        let injective = self.is_injective();
        let surjective = image == t.all();
        let embedding = injective && continuous && open;
        MapProps {
            continuous,
            order_preserving: self.is_order_preserving(),
            open,
            open_into_target,
            closed,
            closed_into_target,
            injective,
            surjective,
            dense_image: t.closure(image) == t.all(),
            embedding,
            homeomorphism: embedding && surjective,
        }
    }
}
