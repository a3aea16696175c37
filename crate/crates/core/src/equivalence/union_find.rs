pub(crate) struct UnionFind {
    parent: Vec<u32>,
    size: Vec<u32>,
}

impl UnionFind {
    pub(crate) fn new(len: usize) -> Self {
        UnionFind { parent: (0..len as u32).collect(), size: vec![1; len] }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            let grand = self.parent[self.parent[x] as usize];
            self.parent[x] = grand;
            x = grand as usize;
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a as u32;
        self.size[a] += self.size[b];
    }

    /// Class id per element and members per class; classes are numbered by
    /// smallest member and members are increasing.
    pub(crate) fn into_classes(mut self) -> (Vec<u32>, Vec<Vec<u32>>) {
        let len = self.parent.len();
        let mut id_of_root = vec![u32::MAX; len];
        let mut class_of = Vec::with_capacity(len);
        let mut classes: Vec<Vec<u32>> = Vec::new();
        for x in 0..len {
            let root = self.find(x);
            if id_of_root[root] == u32::MAX {
                id_of_root[root] = classes.len() as u32;
                classes.push(Vec::new());
            }
            let id = id_of_root[root];
            class_of.push(id);
            classes[id as usize].push(x as u32);
        }
        (class_of, classes)
    }
}
