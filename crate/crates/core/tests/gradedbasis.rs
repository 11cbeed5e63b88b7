use althecke::combinat::*;
use althecke::gradedbasis::*;
use althecke::klrgen::*;
use althecke::seminormal::*;
use althecke::specialize::*;
use std::sync::Arc;

fn q(e: u32) -> Quantum {
    Quantum::new(e).unwrap()
}

fn part(p: &[usize]) -> Partition {
    Partition::new(p.to_vec()).unwrap()
}

fn tab(rows: &[&[usize]]) -> StdTableau {
    StdTableau::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

fn gens(n: usize, e: u32) -> KlrGenerators {
    KlrGenerators::new(Arc::new(SeminormalModel::alternating(n, q(e)))).unwrap()
}

fn specialized(n: usize, e: u32, desc: &str) -> SpecializedGenerators {
    SpecializedGenerators::new(&gens(n, e), Flavor::Circ, parse_target(desc, e).unwrap()).unwrap()
}

fn pairs(n: usize, plus_only: bool) -> Vec<(StdTableau, StdTableau)> {
    let mut out = Vec::new();
    for lambda in partitions(n) {
        let tabs = standard_tableaux(&lambda);
        for s in tabs.iter().filter(|s| !plus_only || s.is_plus()) {
            for t in &tabs {
                out.push((s.clone(), t.clone()));
            }
        }
    }
    out
}

#[test]
fn y_word_examples() {
    assert_eq!(y_word(&part(&[3]), q(3), false).unwrap(), vec![3]);
    assert!(y_word(&part(&[2, 1]), q(3), false).unwrap().is_empty());
    assert_eq!(y_word(&part(&[1, 1, 1]), q(3), true).unwrap(), vec![3]);
    assert_eq!(y_word(&part(&[3, 3]), q(3), false).unwrap(), vec![3, 6]);
}

#[test]
fn cellular_element_examples() {
    let e = q(3);
    let t = tab(&[&[1, 2], &[3]]);
    let u = tab(&[&[1, 3], &[2]]);
    let (w, idx) = cellular_element(&t, &u, e, false).unwrap();
    assert_eq!(w.to_string(), "e(012) psi2");
    assert_eq!(idx.degree, 1);
    let s = tab(&[&[1, 2, 3]]);
    let (w, idx) = cellular_element(&s, &s, e, false).unwrap();
    assert_eq!(w.to_string(), "y3 e(012)");
    assert_eq!(idx.degree, 2);
    let (w, _) = cellular_element(&t, &t, e, true).unwrap();
    assert_eq!(w.to_string(), "psi2 e(021) psi2");
    let v = tab(&[&[1], &[2], &[3]]);
    assert_eq!(cellular_element(&v, &v, e, true).unwrap().0.to_string(), "y3 e(021)");
    assert!(matches!(cellular_element(&s, &t, e, false), Err(althecke::Error::SizeMismatch(_))));
}

/// The grading read off the word agrees with the tableau degrees.
#[test]
fn word_degrees_match_indices() {
    for e in [3, 4, 5] {
        for n in 1..=5 {
            for primed in [false, true] {
                for (s, t) in pairs(n, false) {
                    let (w, idx) = cellular_element(&s, &t, q(e), primed).unwrap();
                    let (d, _) = word_degree(&w).unwrap_or_else(|| panic!("{w} {s} {t} e={e} primed={primed}"));
                    assert_eq!(d, idx.degree, "{s} {t} e={e} primed={primed}");
                }
            }
        }
    }
}

#[test]
fn sgn_sign_examples() {
    let e = q(3);
    let t = tab(&[&[1, 2], &[3]]);
    assert_eq!(sgn_sign(&t, &t, e).unwrap(), 1);
    let s = tab(&[&[1, 2, 3]]);
    assert_eq!(sgn_sign(&s, &s, e).unwrap(), -1);
    for (a, b) in pairs(4, false) {
        assert_eq!(sgn_sign(&a, &b, e).unwrap(), sgn_sign(&b, &a, e).unwrap());
    }
}

#[test]
fn psi_combinations() {
    let e = q(3);
    assert_eq!(psi_indices(3, e, Parity::Plus).unwrap().len(), 3);
    assert!(psi_indices(3, e, Parity::Minus).unwrap().iter().all(|x| x.z2degree == 1));
    let t = tab(&[&[1, 2], &[3]]);
    let c = psi_pm(&t, &t, e, Parity::Plus).unwrap();
    assert_eq!(c.terms[0].1.to_string(), "e(012)");
    assert_eq!(c.terms[1], (1, parse_word(e, "e(021)").unwrap()));
    let g = gens(3, 3);
    assert_eq!(theta_psi(&g, &t, &t, Parity::Plus).unwrap(), g.model().identity());
    // The word combination and the hash construction agree.
    for (s, t) in pairs(3, true) {
        for parity in [Parity::Plus, Parity::Minus] {
            let c = psi_pm(&s, &t, e, parity).unwrap();
            let from_words = c.terms.iter().fold(g.zero().clone(), |acc, (k, w)| {
                let x = g.word_image(w, Flavor::Circ).unwrap();
                if *k > 0 {
                    acc + x
                } else {
                    acc - x
                }
            });
            assert_eq!(from_words, theta_psi(&g, &s, &t, parity).unwrap());
        }
    }
}

#[test]
fn sign_image_identity() {
    for (n, e) in [(3, 3), (4, 3), (4, 4)] {
        let g = gens(n, e);
        for (s, t) in pairs(n, false) {
            let x = theta_cellular(&g, &s, &t, false).unwrap();
            let y = theta_cellular(&g, &s.conjugate(), &t.conjugate(), true).unwrap();
            let sign = sgn_sign(&s, &t, q(e)).unwrap();
            let want = if sign > 0 { y } else { -y };
            assert_eq!(g.model().hash(&x), want, "{s} {t}");
        }
    }
}

#[test]
fn epsilon_turns_plus_into_minus() {
    let g = gens(4, 3);
    for (s, t) in pairs(4, true) {
        let plus = theta_psi(&g, &s, &t, Parity::Plus).unwrap();
        let minus = theta_psi(&g, &s, &t, Parity::Minus).unwrap();
        assert_eq!(&g.eps(1, &s.residues(q(3))) * &plus, minus);
    }
}

#[test]
fn cellular_elements_respect_idempotents() {
    for (n, e) in [(3, 3), (4, 3)] {
        let g = gens(n, e);
        let seqs = g.realizable().to_vec();
        for (s, t) in pairs(n, false) {
            let x = theta_cellular(&g, &s, &t, false).unwrap();
            assert!(!x.is_zero());
            for i in &seqs {
                for j in &seqs {
                    let y = &(g.f(i) * &x) * g.f(j);
                    if *i == s.residues(q(e)) && *j == t.residues(q(e)) {
                        assert_eq!(y, x);
                    } else {
                        assert!(y.is_zero(), "{s} {t} {i} {j}");
                    }
                }
            }
        }
    }
}

#[test]
fn qdim_cross_check() {
    for e in [3, 4, 5] {
        for n in 1..=6 {
            let s_dim = graded_dim(n, q(e), AlgebraKind::S, None);
            assert_eq!(index_qdim(&cellular_indices(n, q(e), false).unwrap()), s_dim);
            assert_eq!(index_qdim(&cellular_indices(n, q(e), true).unwrap()), s_dim);
            if n >= 2 {
                let a_dim = graded_dim(n, q(e), AlgebraKind::A, None);
                assert_eq!(index_qdim(&psi_indices(n, q(e), Parity::Plus).unwrap()), a_dim);
            }
        }
    }
    let want = LaurentPoly::from_pairs(&[(0, 1), (1, 1), (2, 1)]);
    assert_eq!(index_qdim(&psi_indices(3, q(3), Parity::Plus).unwrap()), want);
}

#[test]
fn independence_examples() {
    for (n, e, want) in [(2, 3, (2, 1)), (3, 3, (6, 3)), (4, 3, (24, 12)), (4, 4, (24, 12))] {
        let r = independence_check(n, q(e)).unwrap();
        assert_eq!((r.rank_all, r.rank_plus), want, "n={n} e={e}");
        assert!(r.passed());
    }
}

#[test]
fn specialized_images_stay_independent() {
    for (n, e, desc) in [(3, 3, "fp:3:1"), (4, 3, "fp:7"), (4, 4, "fp:5")] {
        let r = specialized_independence(&specialized(n, e, desc)).unwrap();
        assert!(r.passed(), "{r:?}");
    }
}

#[test]
fn gram_structure_n3() {
    for desc in ["fp:5", "fp:7", "cyclotomic", "fp:3:1"] {
        let sg = specialized(3, 3, desc);
        let gammas = blocks(3, q(3));
        assert_eq!(gammas.len(), 1);
        let gm = gram_matrix(&gammas[0], &sg).unwrap();
        assert_eq!(gm.dim(), 3);
        assert!(gm.diagonal_nonzero(), "{desc}");
        assert!(gm.zero_pattern_violations().is_empty(), "{desc}");
        assert!(gm.is_nonsingular(), "{desc}");
        for (k, r) in gm.rows.iter().enumerate() {
            assert_eq!(r.degree + gm.cols[k].degree, 2 * gm.defect);
            assert_eq!((gm.cols[k].s.clone(), gm.cols[k].t.clone()), (r.s.conjugate(), r.t.conjugate()));
        }
    }
}

#[test]
fn gram_structure_n4_e3() {
    let sg = specialized(4, 3, "fp:7");
    for gamma in blocks(4, q(3)) {
        let gm = gram_matrix(&gamma, &sg).unwrap();
        assert!(gm.diagonal_nonzero() && gm.zero_pattern_violations().is_empty() && gm.is_nonsingular(), "{gamma}");
    }
}

#[test]
fn gram_rows_follow_dominance() {
    let sg = specialized(4, 3, "fp:7");
    for gamma in blocks(4, q(3)) {
        let gm = gram_matrix(&gamma, &sg).unwrap();
        for a in 0..gm.dim() {
            for b in a + 1..gm.dim() {
                let (x, y) = (&gm.rows[a], &gm.rows[b]);
                let later_dominates = pair_dominates((&y.s, &y.t), (&x.s, &x.t));
                assert!(!later_dominates || (y.s == x.s && y.t == x.t));
            }
        }
    }
}

#[test]
fn gram_emitters() {
    let sg = specialized(3, 3, "fp:7");
    let gm = gram_matrix(&blocks(3, q(3))[0], &sg).unwrap();
    let csv = gm.to_csv().unwrap();
    assert!(csv.starts_with("# block"));
    assert_eq!(csv.lines().filter(|l| !l.starts_with('#')).count(), 4);
    let json = gm.to_json();
    assert_eq!(json["entries"].as_array().unwrap().len(), 3);
    assert_eq!(json["zero_pattern_violations"].as_array().unwrap().len(), 0);
}

#[test]
fn basis_table() {
    let idx = psi_indices(3, q(3), Parity::Plus).unwrap();
    let csv = basis_table_csv(&idx).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("lambda,s,t,primed,degree,z2degree"));
    assert_eq!(lines.count(), 3);
}

#[test]
fn block_report_examples() {
    let r = block_report(3, q(3)).unwrap();
    assert_eq!(r.len(), 1);
    assert_eq!((r[0].defect, r[0].size, r[0].classifier), (1, 1, "indecomposable"));
    assert_eq!(r[0].partitions.len(), 3);
    let r = block_report(1, q(4)).unwrap();
    assert_eq!((r[0].defect, r[0].size, r[0].classifier), (0, 1, "splits into two matrix algebras"));
    let r = block_report(2, q(3)).unwrap();
    assert_eq!(r.len(), 1);
    assert_eq!((r[0].size, r[0].classifier), (2, "indecomposable"));
    for (n, e) in [(4, 3), (5, 4), (6, 5)] {
        let total = block_report(n, q(e))
            .unwrap()
            .iter()
            .fold(LaurentPoly::zero(), |acc, b| acc.add(&b.qdim_s));
        assert_eq!(total, graded_dim(n, q(e), AlgebraKind::S, None));
    }
}
