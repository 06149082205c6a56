//! Conjugacy classes via orbit search under the certified generators.

use crate::group::MatrixGroup;

/// The conjugacy class decomposition of an enumerated group.
///
/// Classes are ordered with the identity class first, followed by the
/// remaining classes by their least member index; members of each class are
/// listed in ascending index order.  This ordering depends only on the
/// enumeration order of the group and is therefore deterministic.
pub struct ConjugacyClasses {
    class_of: Vec<u32>,
    members: Vec<Vec<u32>>,
    reps: Vec<u32>,
    orders: Vec<u64>,
    inverse_class: Vec<u32>,
    galois_class: Vec<u32>,
    exponent: u64,
}

impl ConjugacyClasses {
    /// Computes the classes of `g`.
    pub fn compute(g: &MatrixGroup) -> ConjugacyClasses {
        let order = g.order() as usize;
        let gens: Vec<u32> = g.generators().to_vec();
        let gen_invs: Vec<u32> = gens.iter().map(|&x| g.inverse_of(x)).collect();

        let mut class_of = vec![u32::MAX; order];
        let mut members: Vec<Vec<u32>> = Vec::new();
        for seed in 0..order as u32 {
            if class_of[seed as usize] != u32::MAX {
                continue;
            }
            let cid = members.len() as u32;
            let mut orbit = vec![seed];
            class_of[seed as usize] = cid;
            let mut frontier = vec![seed];
            while let Some(x) = frontier.pop() {
                for (&gi, &gv) in gens.iter().zip(&gen_invs) {
                    let y = g.mul_idx(g.mul_idx(gi, x), gv);
                    if class_of[y as usize] == u32::MAX {
                        class_of[y as usize] = cid;
                        orbit.push(y);
                        frontier.push(y);
                    }
                }
            }
            orbit.sort_unstable();
            members.push(orbit);
        }

        // Move the identity class (always the singleton {1}) to the front.
        let id_cid = class_of[g.identity_index() as usize] as usize;
        assert_eq!(members[id_cid].len(), 1, "identity class must be a singleton");
        members.swap(0, id_cid);
        // Restore ascending least-member order for the tail, then rebuild
        // the membership map to match.
        members[1..].sort_unstable_by_key(|m| m[0]);
        for (cid, m) in members.iter().enumerate() {
            for &x in m {
                class_of[x as usize] = cid as u32;
            }
        }
        assert_eq!(
            members.iter().map(Vec::len).sum::<usize>(),
            order,
            "classes must partition the group"
        );

        let reps: Vec<u32> = members.iter().map(|m| m[0]).collect();
        let orders: Vec<u64> = reps.iter().map(|&r| g.element_order(r)).collect();
        let exponent = orders.iter().copied().fold(1u64, lcm);
        let inverse_class: Vec<u32> = reps
            .iter()
            .map(|&r| class_of[g.inverse_of(r) as usize])
            .collect();
        let t = g.tower();
        let galois_class: Vec<u32> = reps
            .iter()
            .map(|&r| {
                let fr = g.mat(r).frobenius(t);
                let idx = g
                    .index_of(&fr)
                    .expect("group is not stable under the field involution");
                class_of[idx as usize]
            })
            .collect();

        ConjugacyClasses {
            class_of,
            members,
            reps,
            orders,
            inverse_class,
            galois_class,
            exponent,
        }
    }

    /// Number of classes.
    pub fn count(&self) -> usize {
        self.reps.len()
    }

    /// Class id of an element index.
    pub fn class_of(&self, idx: u32) -> u32 {
        self.class_of[idx as usize]
    }

    /// The full membership map (element index -> class id).
    pub fn class_map(&self) -> &[u32] {
        &self.class_of
    }

    /// Members of class `c`, ascending.
    pub fn members(&self, c: u32) -> &[u32] {
        &self.members[c as usize]
    }

    /// Size of class `c`.
    pub fn size(&self, c: u32) -> u64 {
        self.members[c as usize].len() as u64
    }

    /// Least-index representative of class `c`.
    pub fn rep(&self, c: u32) -> u32 {
        self.reps[c as usize]
    }

    /// Multiplicative order of the elements of class `c`.
    pub fn element_order(&self, c: u32) -> u64 {
        self.orders[c as usize]
    }

    /// Group exponent (lcm of all element orders).
    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    /// Class of the inverses of class `c`.
    pub fn inverse_class(&self, c: u32) -> u32 {
        self.inverse_class[c as usize]
    }

    /// Class of the entrywise Frobenius images of class `c`.
    pub fn galois_class(&self, c: u32) -> u32 {
        self.galois_class[c as usize]
    }

    /// Class of the `k`-th powers of class `c`.
    pub fn power_class(&self, g: &MatrixGroup, c: u32, k: u64) -> u32 {
        let m = g.mat(self.rep(c)).pow(g.tower(), k);
        let idx = g.index_of(&m).expect("power left the group");
        self.class_of[idx as usize]
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
