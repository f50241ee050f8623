//! Disjoint sets over `0..len` whose representatives are the minimal members.

#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(len: usize) -> Self {
        UnionFind {
            parent: (0..len).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    /// Merges the classes of `a` and `b`; the smaller root survives.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }

    /// Dense class numbering: `classes()[x]` is the index of `x`'s class, with
    /// classes ordered by their minimal member.
    pub fn classes(&mut self) -> (Vec<usize>, usize) {
        let mut index = vec![usize::MAX; self.len()];
        let mut count = 0;
        let class_of = (0..self.len())
            .map(|x| {
                let r = self.find(x);
                if index[r] == usize::MAX {
                    index[r] = count;
                    count += 1;
                }
                index[r]
            })
            .collect();
        (class_of, count)
    }
}
