use althecke::combinat::*;

fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn tab(rows: &[&[usize]]) -> StdTableau {
    StdTableau::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

const E3: Quantum = Quantum::Finite(3);

/// Hook length formula, an independent count of standard tableaux.
fn hook_count(l: &Partition) -> usize {
    let n = l.n();
    let c = l.conjugate();
    let mut hooks: usize = 1;
    for r in 0..l.len() {
        for col in 0..l.row(r) {
            hooks *= l.row(r) - col + c.row(col) - r - 1;
        }
    }
    (1..=n).product::<usize>() / hooks
}

/// Brute force: all fillings that are standard.
fn brute_std(l: &Partition) -> usize {
    all_perms(l.n())
        .iter()
        .filter(|w| {
            let mut k = 0;
            let rows: Vec<Vec<usize>> = l
                .parts()
                .iter()
                .map(|&len| {
                    (0..len)
                        .map(|_| {
                            k += 1;
                            w.apply(k)
                        })
                        .collect()
                })
                .collect();
            StdTableau::from_rows(rows).is_ok()
        })
        .count()
}

#[test]
fn conjugates() {
    assert_eq!(p(&[3]).conjugate(), p(&[1, 1, 1]));
    assert_eq!(p(&[2, 1]).conjugate(), p(&[2, 1]));
    assert_eq!(p(&[4, 2, 1]).conjugate(), p(&[3, 2, 1, 1]));
    for n in 0..=8 {
        for l in partitions(n) {
            assert_eq!(l.conjugate().conjugate(), l);
        }
    }
}

#[test]
fn dominance() {
    assert!(p(&[3]).dominates(&p(&[2, 1])).unwrap());
    assert!(p(&[2, 1]).dominates(&p(&[2, 1])).unwrap());
    assert!(!p(&[4, 1, 1]).dominates(&p(&[3, 3])).unwrap());
    assert!(!p(&[3, 3]).dominates(&p(&[4, 1, 1])).unwrap());
    assert!(p(&[3]).dominates(&p(&[2])).is_err());
}

#[test]
fn tableau_enumeration() {
    let v = standard_tableaux(&p(&[2, 1]));
    assert_eq!(v, vec![tab(&[&[1, 2], &[3]]), tab(&[&[1, 3], &[2]])]);
    assert_eq!(standard_tableaux(&p(&[1])), vec![tab(&[&[1]])]);
    assert_eq!(standard_tableaux(&p(&[3, 2])).len(), brute_std(&p(&[3, 2])));
    assert_eq!(brute_std(&p(&[3, 2])), 5);
    for n in 1..=8 {
        let mut total = 0;
        for l in partitions(n) {
            let c = standard_tableaux(&l).len();
            assert_eq!(c, hook_count(&l));
            total += c * c;
        }
        assert_eq!(total, (1..=n).product::<usize>());
    }
}

#[test]
fn residues() {
    let t = tab(&[&[1, 2], &[3]]);
    let u = tab(&[&[1, 3], &[2]]);
    assert_eq!(t.residues(E3).entries(), &[0, 1, 2]);
    assert_eq!(t.residues(E3).class(), ResidueClass::Plus);
    assert_eq!(u.residues(E3).entries(), &[0, 2, 1]);
    assert_eq!(u.residues(E3).class(), ResidueClass::Minus);
    assert_eq!(tab(&[&[1, 2, 3]]).residues(E3).entries(), &[0, 1, 2]);
}

#[test]
fn residue_symmetries() {
    for e in [3, 4, 5] {
        let e = Quantum::Finite(e);
        for n in 2..=7 {
            for l in partitions(n) {
                for t in standard_tableaux(&l) {
                    let i = t.residues(e);
                    assert_eq!(t.conjugate().residues(e), i.neg());
                    assert_ne!(i.class(), ResidueClass::Neither);
                }
            }
        }
    }
}

#[test]
fn degree_examples() {
    assert_eq!(deg(&tab(&[&[1, 2, 3]]), E3), 1);
    assert_eq!(deg(&tab(&[&[1, 3], &[2]]), E3), 1);
    assert_eq!(deg(&tab(&[&[1, 2], &[3]]), E3), 0);
    assert_eq!(deg(&tab(&[&[1], &[2], &[3]]), E3), 0);
}

#[test]
fn degree_codegree_defect() {
    for e in [3u32, 4, 5] {
        let e = Quantum::Finite(e);
        for n in 1..=7 {
            for l in partitions(n) {
                for t in standard_tableaux(&l) {
                    let (d, c) = degrees(&t, e);
                    let defect = block_data(&t.residues(e)).defect;
                    assert_eq!(d + c, defect, "{t}");
                    assert_eq!(d, codeg(&t.conjugate(), e), "{t}");
                }
            }
        }
    }
}

#[test]
fn block_examples() {
    let e = E3;
    assert_eq!(block_data(&ResidueSeq::new(e, vec![0])).defect, 0);
    let b = block_data(&ResidueSeq::new(e, vec![0, 1, 2]));
    assert_eq!(b.defect, 1);
    assert_eq!(b.alpha, b.alpha_conj);
    assert_eq!(b.gamma.size(), 1);
    let b2 = block_data(&ResidueSeq::new(e, vec![0, 1]));
    assert_eq!(b2.gamma.size(), 2);
    assert_eq!(b2.defect, 0);
}

#[test]
fn graded_dimensions() {
    let a = graded_dim(3, E3, AlgebraKind::A, None);
    assert_eq!(a, LaurentPoly::from_pairs(&[(0, 1), (1, 1), (2, 1)]));
    let s = graded_dim(3, E3, AlgebraKind::S, None);
    assert_eq!(s, LaurentPoly::from_pairs(&[(0, 2), (1, 2), (2, 2)]));
    for e in [3u32, 4, 5] {
        assert_eq!(graded_dim(1, Quantum::Finite(e), AlgebraKind::S, None), LaurentPoly::from_pairs(&[(0, 1)]));
    }
    for n in 2..=6 {
        let f: u64 = (1..=n as u64).product();
        for e in [3u32, 4, 5] {
            let e = Quantum::Finite(e);
            assert_eq!(graded_dim(n, e, AlgebraKind::S, None).at_one(), f);
            assert_eq!(graded_dim(n, e, AlgebraKind::A, None).at_one(), f / 2);
            // summing over blocks recovers the total
            let total = blocks(n, e)
                .iter()
                .fold(LaurentPoly::zero(), |acc, g| acc.add(&graded_dim(n, e, AlgebraKind::A, Some(g))));
            assert_eq!(total, graded_dim(n, e, AlgebraKind::A, None));
        }
    }
}

#[test]
fn counting() {
    assert_eq!(counting_identity(3), (3, 3));
    assert_eq!(counting_identity(2), (1, 1));
    assert_eq!(counting_identity(8), (20160, 20160));
    for n in 2..=8 {
        let (l, r) = counting_identity(n);
        assert_eq!(l, r);
    }
}

#[test]
fn restricted() {
    assert!(p(&[2, 1]).is_e_restricted(3));
    assert!(!p(&[3]).is_e_restricted(3));
    assert!(p(&[4, 2, 2]).is_e_restricted(3));
}

#[test]
fn tableau_permutations() {
    let l = p(&[2, 1]);
    let tl = StdTableau::row_tableau(&l);
    let pr = perms_of(&tl);
    assert!(pr.d.is_identity() && pr.word.is_empty());
    let u = tab(&[&[1, 3], &[2]]);
    let pu = perms_of(&u);
    assert_eq!(pu.word, vec![2]);
    assert_eq!(tl.act(&pu.d).unwrap(), u);
    for n in 1..=5 {
        for l in partitions(n) {
            for t in standard_tableaux(&l) {
                let pt = perms_of(&t);
                assert_eq!(StdTableau::row_tableau(&l).act(&pt.d).unwrap(), t);
                assert_eq!(StdTableau::col_tableau(&l).act(&pt.dprime).unwrap(), t);
                assert_eq!(Perm::from_word(n, &pt.word), pt.d);
                assert_eq!(pt.word.len(), pt.d.length());
            }
        }
    }
}

#[test]
fn reduced_words_are_lex_least() {
    // brute force over all words of the right length for n = 4
    fn words(n: usize, len: usize) -> Vec<Vec<usize>> {
        if len == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for w in words(n, len - 1) {
            for r in 1..n {
                let mut v = w.clone();
                v.push(r);
                out.push(v);
            }
        }
        out
    }
    for w in all_perms(4) {
        let best = words(4, w.length()).into_iter().find(|v| Perm::from_word(4, v) == w).unwrap();
        assert_eq!(w.reduced_word(), best);
    }
}
