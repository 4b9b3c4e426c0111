//! Sequence of weighted items with `O(lg m)` expected positional updates.
//!
//! An implicit treap stored in an arena. Every item carries a weight; nodes
//! keep subtree sizes and weight sums so items can be found by index or by
//! cumulative weight. With weights in `{0, 1}` it doubles as a dynamic
//! bitvector.

const NIL: u32 = u32::MAX;

#[derive(Clone, Debug)]
struct Node<T> {
    left: u32,
    right: u32,
    prio: u64,
    size: u32,
    weight: u64,
    sum: u64,
    value: T,
}

#[derive(Clone, Debug)]
pub struct WeightedSeq<T> {
    nodes: Vec<Node<T>>,
    free: Vec<u32>,
    root: u32,
    ticket: u64,
}

impl<T> Default for WeightedSeq<T> {
    fn default() -> Self {
        Self::new()
    }
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

impl<T> WeightedSeq<T> {
    pub fn new() -> Self {
        WeightedSeq {
            nodes: Vec::new(),
            free: Vec::new(),
            root: NIL,
            ticket: 0,
        }
    }

    pub fn len(&self) -> usize {
        self.size(self.root)
    }

    pub fn is_empty(&self) -> bool {
        self.root == NIL
    }

    /// Sum of all weights.
    pub fn total(&self) -> u64 {
        self.sum(self.root)
    }

    fn size(&self, t: u32) -> usize {
        if t == NIL {
            0
        } else {
            self.nodes[t as usize].size as usize
        }
    }

    fn sum(&self, t: u32) -> u64 {
        if t == NIL {
            0
        } else {
            self.nodes[t as usize].sum
        }
    }

    fn zeros(&self, t: u32) -> u64 {
        self.size(t) as u64 - self.sum(t)
    }

    fn pull(&mut self, t: u32) {
        let (l, r) = {
            let n = &self.nodes[t as usize];
            (n.left, n.right)
        };
        let size = 1 + self.size(l) + self.size(r);
        let sum = self.nodes[t as usize].weight + self.sum(l) + self.sum(r);
        let n = &mut self.nodes[t as usize];
        n.size = size as u32;
        n.sum = sum;
    }

    fn alloc(&mut self, weight: u64, value: T) -> u32 {
        self.ticket += 1;
        let node = Node {
            left: NIL,
            right: NIL,
            prio: splitmix64(self.ticket),
            size: 1,
            weight,
            sum: weight,
            value,
        };
        match self.free.pop() {
            Some(slot) => {
                self.nodes[slot as usize] = node;
                slot
            }
            None => {
                self.nodes.push(node);
                (self.nodes.len() - 1) as u32
            }
        }
    }

    /// First `k` items go left.
    fn split(&mut self, t: u32, k: usize) -> (u32, u32) {
        if t == NIL {
            return (NIL, NIL);
        }
        let left = self.nodes[t as usize].left;
        let ls = self.size(left);
        if k <= ls {
            let (a, b) = self.split(left, k);
            self.nodes[t as usize].left = b;
            self.pull(t);
            (a, t)
        } else {
            let right = self.nodes[t as usize].right;
            let (a, b) = self.split(right, k - ls - 1);
            self.nodes[t as usize].right = a;
            self.pull(t);
            (t, b)
        }
    }

    fn merge(&mut self, a: u32, b: u32) -> u32 {
        if a == NIL {
            return b;
        }
        if b == NIL {
            return a;
        }
        if self.nodes[a as usize].prio > self.nodes[b as usize].prio {
            let ar = self.nodes[a as usize].right;
            let m = self.merge(ar, b);
            self.nodes[a as usize].right = m;
            self.pull(a);
            a
        } else {
            let bl = self.nodes[b as usize].left;
            let m = self.merge(a, bl);
            self.nodes[b as usize].left = m;
            self.pull(b);
            b
        }
    }

    /// Inserts so the new item has index `idx` (0-based).
    pub fn insert(&mut self, idx: usize, weight: u64, value: T) {
        assert!(idx <= self.len(), "insert index {idx} out of range");
        let node = self.alloc(weight, value);
        let (l, r) = self.split(self.root, idx);
        let l = self.merge(l, node);
        self.root = self.merge(l, r);
    }

    pub fn push(&mut self, weight: u64, value: T) {
        self.insert(self.len(), weight, value);
    }

    /// Removes item `idx` and returns its weight and a reference to its value
    /// slot (the slot is recycled on the next insert).
    pub fn remove(&mut self, idx: usize) -> (u64, &T) {
        assert!(idx < self.len(), "remove index {idx} out of range");
        let (l, r) = self.split(self.root, idx);
        let (m, r) = self.split(r, 1);
        self.root = self.merge(l, r);
        self.free.push(m);
        let n = &self.nodes[m as usize];
        (n.weight, &n.value)
    }

    fn node_at(&self, mut idx: usize) -> u32 {
        let mut t = self.root;
        loop {
            let n = &self.nodes[t as usize];
            let ls = self.size(n.left);
            if idx < ls {
                t = n.left;
            } else if idx == ls {
                return t;
            } else {
                idx -= ls + 1;
                t = n.right;
            }
        }
    }

    pub fn get(&self, idx: usize) -> (u64, &T) {
        assert!(idx < self.len(), "index {idx} out of range");
        let n = &self.nodes[self.node_at(idx) as usize];
        (n.weight, &n.value)
    }

    pub fn weight(&self, idx: usize) -> u64 {
        self.get(idx).0
    }

    pub fn set_weight(&mut self, idx: usize, weight: u64) {
        assert!(idx < self.len(), "index {idx} out of range");
        let root = self.root;
        self.set_weight_in(root, idx, weight);
    }

    fn set_weight_in(&mut self, t: u32, idx: usize, weight: u64) {
        let (l, r) = {
            let n = &self.nodes[t as usize];
            (n.left, n.right)
        };
        let ls = self.size(l);
        if idx < ls {
            self.set_weight_in(l, idx, weight);
        } else if idx == ls {
            self.nodes[t as usize].weight = weight;
        } else {
            self.set_weight_in(r, idx - ls - 1, weight);
        }
        self.pull(t);
    }

    /// Total weight of items `0..idx`.
    pub fn prefix(&self, mut idx: usize) -> u64 {
        let mut acc = 0;
        let mut t = self.root;
        while t != NIL && idx > 0 {
            let n = &self.nodes[t as usize];
            let ls = self.size(n.left);
            if idx <= ls {
                t = n.left;
            } else {
                acc += self.sum(n.left) + n.weight;
                idx -= ls + 1;
                t = n.right;
            }
        }
        acc
    }

    /// Item holding unit `w` (1-based) of the cumulative weight, with the
    /// 1-based offset of that unit inside the item.
    pub fn locate(&self, mut w: u64) -> Option<(usize, u64)> {
        if w == 0 || w > self.total() {
            return None;
        }
        let mut t = self.root;
        let mut base = 0;
        loop {
            let n = &self.nodes[t as usize];
            let lsum = self.sum(n.left);
            if w <= lsum {
                t = n.left;
            } else if w <= lsum + n.weight {
                return Some((base + self.size(n.left), w - lsum));
            } else {
                w -= lsum + n.weight;
                base += self.size(n.left) + 1;
                t = n.right;
            }
        }
    }

    /// Index of the `j`-th (1-based) item of weight zero, for 0/1 weights.
    pub fn locate_zero(&self, mut j: u64) -> Option<usize> {
        if j == 0 || j > self.zeros(self.root) {
            return None;
        }
        let mut t = self.root;
        let mut base = 0;
        loop {
            let n = &self.nodes[t as usize];
            let lz = self.zeros(n.left);
            let here = u64::from(n.weight == 0);
            if j <= lz {
                t = n.left;
            } else if j <= lz + here {
                return Some(base + self.size(n.left));
            } else {
                j -= lz + here;
                base += self.size(n.left) + 1;
                t = n.right;
            }
        }
    }

    /// In-order visit of `(weight, value)`.
    pub fn for_each(&self, mut f: impl FnMut(u64, &T)) {
        let mut stack = Vec::new();
        let mut t = self.root;
        while t != NIL || !stack.is_empty() {
            while t != NIL {
                stack.push(t);
                t = self.nodes[t as usize].left;
            }
            let top = stack.pop().unwrap();
            let n = &self.nodes[top as usize];
            f(n.weight, &n.value);
            t = n.right;
        }
    }
}

impl<T: Copy> WeightedSeq<T> {
    pub fn value(&self, idx: usize) -> T {
        *self.get(idx).1
    }
}
