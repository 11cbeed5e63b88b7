//! Deformed KLR generators inside the seminormal model, the super-generators
//! of the alternating subalgebra, and relation suites that verify them.

mod suites;
mod words;

pub use suites::{relation_suites, run_suite, Failure, Instance, RelationReport, RelationSuite};
pub use words::{parse_word, word_degree, Token, Word};

use crate::combinat::{Quantum, ResidueClass, ResidueSeq};
use crate::error::{Error, Result};
use crate::exactfield::{sqrt_bracket, ExtScalar};
use crate::seminormal::{AlgebraElement, SeminormalModel};
use std::collections::HashMap;
use std::sync::Arc;

/// Which family of generators a word or relation refers to.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Flavor {
    /// `ψ⁺_r, y⁺_s` built from the Jucys–Murphy elements.
    Plus,
    /// `ψ⁻_r, y⁻_s`, the hash images of the plus generators.
    Minus,
    /// `ψ°_r, y°_s`, the combined generators on `I⁺ ∪ I⁻`.
    Circ,
}

impl Flavor {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "plus" | "+" => Ok(Flavor::Plus),
            "minus" | "-" => Ok(Flavor::Minus),
            "circ" | "o" => Ok(Flavor::Circ),
            _ => Err(Error::Unknown { kind: "generator flavor", name: s.to_string() }),
        }
    }
}

/// Construction switches, used for fault injection.
#[derive(Clone, Copy, Debug, Default)]
pub struct GeneratorOptions {
    /// Omit the `κ` normalisation of `ψ°_2`.
    pub drop_kappa: bool,
}

/// `±1` for `I⁺` and `I⁻`.
pub fn class_sign(i: &ResidueSeq) -> Option<i64> {
    match i.class() {
        ResidueClass::Plus => Some(1),
        ResidueClass::Minus => Some(-1),
        ResidueClass::Neither => None,
    }
}

/// Normalisation `κ_i` of `ψ°_2 f_i`; equal for `i` and `−i`.
pub fn kappa(i: &ResidueSeq) -> Result<ExtScalar> {
    if class_sign(i).is_none() {
        return Err(Error::Domain(format!("κ is only defined on I⁺ ∪ I⁻, not at {i}")));
    }
    match i.e() {
        Quantum::Finite(3) => Ok(ExtScalar::t_pow(-1)),
        _ => Ok(ExtScalar::u_pow(1) * sqrt_bracket(3)?.inv()?),
    }
}

pub struct KlrGenerators {
    model: Arc<SeminormalModel>,
    options: GeneratorOptions,
    realizable: Vec<ResidueSeq>,
    idempotents: HashMap<ResidueSeq, AlgebraElement>,
    zero: AlgebraElement,
    psi_plus: Vec<AlgebraElement>,
    psi_minus: Vec<AlgebraElement>,
    psi_circ: Vec<AlgebraElement>,
    y_plus: Vec<AlgebraElement>,
    y_minus: Vec<AlgebraElement>,
    y_circ: Vec<AlgebraElement>,
}

impl KlrGenerators {
    pub fn new(model: Arc<SeminormalModel>) -> Result<Self> {
        Self::with_options(model, GeneratorOptions::default())
    }

    pub fn with_options(model: Arc<SeminormalModel>, options: GeneratorOptions) -> Result<Self> {
        if model.e().finite().is_some_and(|e| e < 3) {
            return Err(Error::Domain("the generators need e ≥ 3".into()));
        }
        let n = model.n();
        let realizable = model.realizable();
        let idempotents: HashMap<ResidueSeq, AlgebraElement> =
            realizable.iter().map(|i| (i.clone(), model.residue_idempotent(i))).collect();
        let zero = model.zero();
        let one = model.identity();
        let mut psi_plus = Vec::with_capacity(n.saturating_sub(1));
        for r in 1..n {
            let t = model.t(r);
            let l = model.jm(r);
            let comm = &(t * &l) - &(&l * t);
            let one_plus_t = &one + t;
            let mut acc = zero.clone();
            for i in &realizable {
                let f = &idempotents[i];
                let term = if i.at(r) == i.at(r + 1) {
                    &one_plus_t * &model.inv_m_on(r, i)?.scale(&ExtScalar::t_pow(i.hat(r)))
                } else if i.arrow_left(r) {
                    &comm * &f.scale(&ExtScalar::t_pow(-i.hat(r)))
                } else {
                    &comm * &model.inv_m_on(r, i)?
                };
                acc = acc + term;
            }
            psi_plus.push(acc);
        }
        let y_plus: Vec<AlgebraElement> = (1..=n)
            .map(|s| {
                model.diag(|b, j| {
                    let block = &model.blocks()[b];
                    let h = block.residues[j].hat(s);
                    ExtScalar::qint(block.tableaux[j].content(s) - h)
                })
            })
            .collect();
        let psi_minus: Vec<AlgebraElement> = psi_plus.iter().map(|x| model.hash(x)).collect();
        let y_minus: Vec<AlgebraElement> = y_plus.iter().map(|x| model.hash(x)).collect();
        let mut g = KlrGenerators {
            model,
            options,
            realizable,
            idempotents,
            zero,
            psi_plus,
            psi_minus,
            psi_circ: vec![],
            y_plus,
            y_minus,
            y_circ: vec![],
        };
        g.psi_circ = (1..n).map(|r| g.build_circ(r, true)).collect::<Result<_>>()?;
        g.y_circ = (1..=n).map(|s| g.build_circ(s, false)).collect::<Result<_>>()?;
        Ok(g)
    }

    /// `Σ_{i ∈ I⁺} κ (x⁺ f_i − x⁻ f_{−i})`, with `κ` only for `ψ_2`.
    fn build_circ(&self, r: usize, psi: bool) -> Result<AlgebraElement> {
        let (plus, minus) = if psi {
            (&self.psi_plus[r - 1], &self.psi_minus[r - 1])
        } else {
            (&self.y_plus[r - 1], &self.y_minus[r - 1])
        };
        let mut acc = self.zero.clone();
        for i in self.realizable.iter().filter(|i| i.class() == ResidueClass::Plus) {
            let term = &(plus * self.f(i)) - &(minus * self.f(&i.neg()));
            acc = acc
                + if psi && r == 2 && !self.options.drop_kappa { term.scale(&kappa(i)?) } else { term };
        }
        Ok(acc)
    }

    pub fn model(&self) -> &SeminormalModel {
        &self.model
    }

    pub fn model_arc(&self) -> &Arc<SeminormalModel> {
        &self.model
    }

    pub fn n(&self) -> usize {
        self.model.n()
    }

    pub fn e(&self) -> Quantum {
        self.model.e()
    }

    pub fn options(&self) -> GeneratorOptions {
        self.options
    }

    pub fn zero(&self) -> &AlgebraElement {
        &self.zero
    }

    /// Residue sequences with `f_i ≠ 0`.
    pub fn realizable(&self) -> &[ResidueSeq] {
        &self.realizable
    }

    /// Realizable sequences in `I⁺ ∪ I⁻`.
    pub fn signed_realizable(&self) -> Vec<ResidueSeq> {
        self.realizable.iter().filter(|i| class_sign(i).is_some()).cloned().collect()
    }

    /// `f_i`, zero when `i` is not realizable.
    pub fn f(&self, i: &ResidueSeq) -> &AlgebraElement {
        self.idempotents.get(i).unwrap_or(&self.zero)
    }

    pub fn psi(&self, flavor: Flavor, r: usize) -> &AlgebraElement {
        match flavor {
            Flavor::Plus => &self.psi_plus[r - 1],
            Flavor::Minus => &self.psi_minus[r - 1],
            Flavor::Circ => &self.psi_circ[r - 1],
        }
    }

    pub fn y(&self, flavor: Flavor, s: usize) -> &AlgebraElement {
        match flavor {
            Flavor::Plus => &self.y_plus[s - 1],
            Flavor::Minus => &self.y_minus[s - 1],
            Flavor::Circ => &self.y_circ[s - 1],
        }
    }

    /// `ε_a(i) = f_i + (−1)^a f_{−i}`.
    pub fn eps(&self, a: u8, i: &ResidueSeq) -> AlgebraElement {
        let (p, m) = (self.f(i), self.f(&i.neg()));
        if a.is_multiple_of(2) {
            p + m
        } else {
            p - m
        }
    }

    /// Shifted generator `⟨d⟩_r f_i = (t^d y_r − σ[d]) f_i`, where `σ = ±1`
    /// follows the class of `i` for the combined flavor, `+1` for the plus
    /// flavor and `−1` for the minus flavor.
    pub fn shifted(&self, flavor: Flavor, d: i64, r: usize, i: &ResidueSeq) -> AlgebraElement {
        let sigma = match flavor {
            Flavor::Plus => 1,
            Flavor::Minus => -1,
            Flavor::Circ => match class_sign(i) {
                Some(s) => s,
                None => return self.zero.clone(),
            },
        };
        let f = self.f(i);
        let y = (self.y(flavor, r) * f).scale(&ExtScalar::t_pow(d));
        y - f.scale(&ExtScalar::qint(d).mul_ref(&ExtScalar::from_int(sigma)))
    }

    /// Generators of the alternating block algebra: `Ψ_r(i) = ψ°_r ε_1(i)`.
    pub fn big_psi(&self, r: usize, i: &ResidueSeq) -> AlgebraElement {
        self.psi(Flavor::Circ, r) * &self.eps(1, i)
    }

    /// `Y_s(i) = y°_s ε_1(i)`.
    pub fn big_y(&self, s: usize, i: &ResidueSeq) -> AlgebraElement {
        self.y(Flavor::Circ, s) * &self.eps(1, i)
    }

    /// `E(i) = ε_0(i)`.
    pub fn big_e(&self, i: &ResidueSeq) -> AlgebraElement {
        self.eps(0, i)
    }

    /// Deformed `t^d Y_r(i) ∓ [d] E(i)` for `i ∈ I^±`.
    pub fn big_y_shifted(&self, d: i64, r: usize, i: &ResidueSeq) -> AlgebraElement {
        let Some(sigma) = class_sign(i) else { return self.zero.clone() };
        self.big_y(r, i).scale(&ExtScalar::t_pow(d)) - self.big_e(i).scale(&ExtScalar::qint(d).mul_ref(&ExtScalar::from_int(sigma)))
    }

    /// Evaluate a word of tokens as a product in the seminormal model.
    pub fn word_image(&self, word: &Word, flavor: Flavor) -> Result<AlgebraElement> {
        let n = self.n();
        let mut acc = self.model.identity();
        for tok in word.tokens() {
            let x = match tok {
                Token::Psi(r) if (1..n).contains(r) => self.psi(flavor, *r).clone(),
                Token::Y(s) if (1..=n).contains(s) => self.y(flavor, *s).clone(),
                Token::E(i) | Token::Eps(_, i) if i.len() != n || i.e() != self.e() => {
                    return Err(Error::InvalidToken(format!("{tok} does not match n = {n}, e = {}", self.e())));
                }
                Token::E(i) => self.f(i).clone(),
                Token::Eps(a, i) => self.eps(*a, i),
                _ => return Err(Error::InvalidToken(format!("{tok} is out of range for n = {n}"))),
            };
            acc = &acc * &x;
        }
        Ok(acc)
    }

    /// Dimension of the unital subalgebra generated by `ψ°_r`, `y°_s` and
    /// `f_i` (`i ∈ I^±`), by closing the span under left multiplication.
    pub fn generated_dimension(&self) -> usize {
        let n = self.n();
        let mut gens: Vec<AlgebraElement> = (1..n).map(|r| self.psi(Flavor::Circ, r).clone()).collect();
        gens.extend((1..=n).map(|s| self.y(Flavor::Circ, s).clone()));
        gens.extend(self.signed_realizable().iter().map(|i| self.f(i).clone()));
        let mut basis = crate::linalg::Echelon::new();
        let one = self.model.identity();
        basis.insert(one.flatten());
        let mut frontier = vec![one];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for x in &frontier {
                for g in &gens {
                    let y = g * x;
                    if basis.insert(y.flatten()) {
                        next.push(y);
                    }
                }
            }
            frontier = next;
        }
        basis.rank()
    }
}
