use althecke::combinat::*;
use althecke::exactfield::{sqrt_bracket, ExtScalar};
use althecke::seminormal::*;
use rand::{Rng, SeedableRng};
use std::sync::Arc;

fn tab(rows: &[&[usize]]) -> StdTableau {
    StdTableau::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

const E3: Quantum = Quantum::Finite(3);

fn random_element(m: &SeminormalModel, rng: &mut impl Rng, terms: usize) -> AlgebraElement {
    let n = m.n();
    let mut acc = m.zero();
    for _ in 0..terms {
        let mut x = m.scalar(&ExtScalar::from_int(rng.gen_range(-3..=3)));
        for _ in 0..rng.gen_range(0..4) {
            if n > 1 {
                x = x.mul_ref(m.t(rng.gen_range(1..n)));
            }
        }
        acc = acc + x;
    }
    acc
}

#[test]
fn alternating_examples() {
    let t = tab(&[&[1, 2], &[3]]);
    let a = Alternating.alpha(2, &t);
    let expected = ExtScalar::i() * ExtScalar::u_pow(1) * sqrt_bracket(3).unwrap() * ExtScalar::qint(2).inv().unwrap();
    assert_eq!(a, expected);
    assert!(Alternating.alpha(1, &t).is_zero());
    let v = t.swap(2).unwrap();
    let two = ExtScalar::qint(2);
    let value = ExtScalar::t_pow(1) * ExtScalar::qint(3) * (&two * &two).inv().unwrap();
    // α₂(t)² = −α₂(s)α₂(t) = −t[3]/[2]²
    assert_eq!(&a * &a, -value.clone());
    assert_eq!(a * Alternating.alpha(2, &v), value);
}

#[test]
fn coefficient_systems_validate() {
    for n in 1..=4 {
        assert!(validate_coeff_system(&Alternating, n).passed(), "alternating n={n}");
        assert!(validate_coeff_system(&Plain, n).passed(), "plain n={n}");
        let hc = HashConjugate(Arc::new(Alternating));
        assert!(validate_coeff_system(&hc, n).passed(), "hash-conjugate n={n}");
    }
    let flipped = FlippedSign::first_nonzero(Arc::new(Alternating), 3).unwrap();
    let rep = validate_coeff_system(&flipped, 3);
    assert!(rep.failures.iter().any(|f| f.condition == "d" && f.r == flipped.r && f.tableau == flipped.tableau));
}

#[test]
fn small_representations() {
    let m = SeminormalModel::alternating(2, E3);
    let row = m.block_of(&Partition::new(vec![2]).unwrap()).unwrap();
    let col = m.block_of(&Partition::new(vec![1, 1]).unwrap()).unwrap();
    assert_eq!(m.t(1).block(row).get(0, 0), &ExtScalar::t_pow(1));
    assert_eq!(m.t(1).block(col).get(0, 0), &ExtScalar::from_int(-1));
}

#[test]
fn hecke_relations() {
    for (n, sys) in [(4usize, Arc::new(Alternating) as Arc<dyn CoeffSystem>), (4, Arc::new(Plain))] {
        let m = SeminormalModel::new(n, E3, sys);
        assert_eq!(m.dimension(), (1..=n).product::<usize>());
        let one = m.identity();
        let t = m.scalar(&ExtScalar::t_pow(1));
        for r in 1..n {
            let q = (m.t(r) - &t).mul_ref(&(m.t(r) + &one));
            assert!(q.is_zero());
            if r + 1 < n {
                let a = m.t(r).mul_ref(m.t(r + 1)).mul_ref(m.t(r));
                let b = m.t(r + 1).mul_ref(m.t(r)).mul_ref(m.t(r + 1));
                assert_eq!(a, b);
            }
            for k in r + 2..n {
                assert_eq!(m.t(r).mul_ref(m.t(k)), m.t(k).mul_ref(m.t(r)));
            }
        }
    }
}

#[test]
fn jucys_murphy_and_m() {
    let m = SeminormalModel::alternating(3, E3);
    assert!(m.jm(1).is_zero());
    let (b, j) = m.locate(&tab(&[&[1, 2], &[3]])).unwrap();
    assert_eq!(m.jm(3).block(b).get(j, j), &-ExtScalar::t_pow(-1));
    // L_k = Σ_{j<k} t^{j−k} T_{(j,k)}, checked for k = 2, 3
    let l2 = m.t(1).scale(&ExtScalar::t_pow(-1));
    assert_eq!(m.jm(2), l2);
    let t13 = m.t(2).mul_ref(m.t(1)).mul_ref(m.t(2));
    let l3 = t13.scale(&ExtScalar::t_pow(-2)) + m.t(2).scale(&ExtScalar::t_pow(-1));
    assert_eq!(m.jm(3), l3);
    // M_r = 1 − L_r + t L_{r+1}
    for r in 1..3 {
        let mr = m.identity() - m.jm(r) + m.jm(r + 1).scale(&ExtScalar::t_pow(1));
        assert_eq!(m.m_elem(r), mr);
    }
    for i in m.realizable() {
        for r in 1..3 {
            match m.inv_m_on(r, &i) {
                Ok(inv) => assert_eq!(m.m_elem(r).mul_ref(&inv), m.residue_idempotent(&i)),
                Err(_) => assert!(i.arrow_left(r)),
            }
        }
    }
}

#[test]
fn idempotents() {
    let m = SeminormalModel::alternating(3, E3);
    let f = m.residue_idempotent(&ResidueSeq::new(E3, vec![0, 1, 2]));
    let sel: Vec<StdTableau> = m
        .blocks()
        .iter()
        .flat_map(|b| (0..b.dim()).filter(|&j| f.blocks()[m.block_of(&b.lambda).unwrap()].get(j, j).is_one()).map(|j| b.tableaux[j].clone()))
        .collect();
    assert_eq!(sel, vec![tab(&[&[1, 2, 3]]), tab(&[&[1, 2], &[3]])]);
    assert!(m.residue_idempotent(&ResidueSeq::new(E3, vec![0, 0, 0])).is_zero());
    let m5 = SeminormalModel::alternating(5, E3);
    let all = m5.realizable();
    let mut sum = m5.zero();
    for i in &all {
        let fi = m5.residue_idempotent(i);
        sum = sum + fi.clone();
        for j in &all {
            let p = fi.mul_ref(&m5.residue_idempotent(j));
            if i == j {
                assert_eq!(p, fi);
            } else {
                assert!(p.is_zero());
            }
        }
    }
    assert_eq!(sum, m5.identity());
}

#[test]
fn gamma_and_star() {
    for n in 1..=4 {
        let m = SeminormalModel::alternating(n, E3);
        for (k, b) in m.blocks().iter().enumerate() {
            let g = m.gamma_scalars(k).unwrap();
            assert!(g[0].is_one());
            assert!(g.iter().all(|x| !x.is_zero()));
            for s in &b.tableaux {
                for t in &b.tableaux {
                    let fst = m.f_st(s, t).unwrap();
                    assert_eq!(m.star(&fst), m.f_st(t, s).unwrap());
                    for u in &b.tableaux {
                        for v in &b.tableaux {
                            let lhs = fst.mul_ref(&m.f_st(u, v).unwrap());
                            let rhs = if t == u {
                                m.f_st(s, v).unwrap().scale(&g[b.index_of(t).unwrap()])
                            } else {
                                m.zero()
                            };
                            assert_eq!(lhs, rhs);
                        }
                    }
                }
            }
        }
        for r in 1..n {
            assert_eq!(&m.star(m.t(r)), m.t(r));
        }
    }
    let m = SeminormalModel::alternating(4, E3);
    let mut rng = rand::rngs::StdRng::seed_from_u64(7);
    for _ in 0..10 {
        let a = random_element(&m, &mut rng, 3);
        let b = random_element(&m, &mut rng, 3);
        assert_eq!(m.star(&m.star(&a)), a);
        assert_eq!(m.star(&a.mul_ref(&b)), m.star(&b).mul_ref(&m.star(&a)));
        assert_eq!(m.hash(&m.hash(&a)), a);
        assert_eq!(m.hash(&m.star(&a)), m.star(&m.hash(&a)));
        assert_eq!(m.hash(&a.mul_ref(&b)), m.hash(&a).mul_ref(&m.hash(&b)));
    }
}

#[test]
fn hash_properties() {
    for n in 1..=4 {
        for e in [3u32, 4, 5] {
            let e = Quantum::Finite(e);
            let m = SeminormalModel::alternating(n, e);
            assert!(m.hash_generators_ok());
            for i in m.realizable() {
                assert_eq!(m.hash(&m.residue_idempotent(&i)), m.residue_idempotent(&i.neg()));
            }
        }
    }
    let m = SeminormalModel::alternating(4, E3);
    for k in 1..=4 {
        let h = m.hash(&m.jm(k));
        for b in m.blocks() {
            let kb = m.block_of(&b.lambda).unwrap();
            for (j, s) in b.tableaux.iter().enumerate() {
                assert_eq!(h.block(kb).get(j, j), &ExtScalar::qint(s.conjugate().content(k)));
            }
        }
    }
}

#[test]
fn hashed_basis_is_seminormal() {
    // T_r f_st^# = −α_r(s) f_ut^# − f_st^#/[ρ_r(s′)]
    let m = SeminormalModel::alternating(4, E3);
    for b in m.blocks() {
        for s in &b.tableaux {
            for t in &b.tableaux {
                let h = m.hash(&m.f_st(s, t).unwrap());
                for r in 1..4 {
                    let lhs = m.t(r).mul_ref(&h);
                    let mut rhs = h.scale(&-ExtScalar::qint(s.conjugate().rho(r)).inv().unwrap());
                    if let Some(u) = s.swap(r) {
                        let a = -Alternating.alpha(r, s);
                        rhs = rhs + m.hash(&m.f_st(&u, t).unwrap()).scale(&a);
                    }
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}

#[test]
fn separation_and_bimodules() {
    for n in 1..=6 {
        let mut seen = std::collections::HashSet::new();
        for l in partitions(n) {
            for t in standard_tableaux(&l) {
                assert!(seen.insert(t.contents()));
            }
        }
    }
    // simultaneous JM eigenspaces H_{st} are one-dimensional
    let m = SeminormalModel::alternating(4, E3);
    let pairs: Vec<(Vec<i64>, usize, usize, usize)> = m
        .blocks()
        .iter()
        .enumerate()
        .flat_map(|(k, b)| {
            let cs: Vec<Vec<i64>> = b.tableaux.iter().map(|t| t.contents()).collect();
            (0..b.dim()).flat_map(move |x| (0..b.dim()).map(move |y| (k, x, y))).map(move |(k, x, y)| {
                let mut key = cs[x].clone();
                key.extend(&cs[y]);
                (key, k, x, y)
            })
        })
        .collect();
    let keys: std::collections::HashSet<_> = pairs.iter().map(|p| p.0.clone()).collect();
    assert_eq!(keys.len(), pairs.len());
}

#[test]
fn tw_conversion() {
    let m = SeminormalModel::alternating(3, E3);
    let id = m.to_tw(&m.identity()).unwrap();
    assert_eq!(id, TwElement::basis(Perm::identity(3)));
    for n in 1..=4 {
        let m = SeminormalModel::alternating(n, E3);
        for w in all_perms(n) {
            let tau = m.tau(m.tw_matrix(&w).unwrap()).unwrap();
            assert_eq!(tau.is_one(), w.is_identity());
            assert!(w.is_identity() || tau.is_zero());
        }
    }
    let m = SeminormalModel::alternating(4, E3);
    let mut rng = rand::rngs::StdRng::seed_from_u64(11);
    for _ in 0..100 {
        let a = random_element(&m, &mut rng, 2);
        let b = random_element(&m, &mut rng, 2);
        assert_eq!(m.tau(&a.mul_ref(&b)).unwrap(), m.tau(&b.mul_ref(&a)).unwrap());
    }
    for _ in 0..5 {
        let a = random_element(&m, &mut rng, 3);
        assert_eq!(m.from_tw(&m.to_tw(&a).unwrap()).unwrap(), a);
    }
}

#[test]
fn trace_cache_round_trip() {
    let dir = std::env::temp_dir().join(format!("althecke-cache-{}", std::process::id()));
    let a = SeminormalModel::alternating(3, E3).with_cache_dir(Some(dir.clone()));
    let w1 = a.trace_weights().unwrap().to_vec();
    let b = SeminormalModel::alternating(3, E3).with_cache_dir(Some(dir.clone()));
    assert_eq!(b.trace_weights().unwrap(), &w1[..]);
    assert!(std::fs::read_dir(&dir).unwrap().count() >= 1);
    let _ = std::fs::remove_dir_all(dir);
}
