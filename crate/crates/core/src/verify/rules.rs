use num_bigint::BigInt;

use super::{Instance, QuasiSecondFn, RuleId, Witness};
use crate::module::{FiniteModule, ModuleSpec, ScalarClass, Submodule};
use crate::oracle::{cross_check, to_mask, Axiom, FiniteTopology, MAX_T5_POINTS};
use crate::ring::{FiniteRing, RingSpec};
use crate::scalar::{scalar_gcd, scalar_lcm, Poly, Scalar};
use crate::topology::{PointSet, QuasiDivisorSpace};

/// Upper bound on sampled domain elements per instance.
const MAX_SAMPLES: usize = 256;

pub(crate) enum Check {
    Pass,
    Vacuous,
    Fail(Witness),
}

impl Check {
    fn holds(ok: bool, fail: impl FnOnce() -> Witness) -> Check {
        if ok {
            Check::Pass
        } else {
            Check::Fail(fail())
        }
    }
}

/// Topological flags, from the oracle when it is available.
struct Flags {
    t0: bool,
    t1: bool,
    t2: bool,
    discrete: bool,
    metrizable: bool,
    hyperconnected: bool,
    nested: bool,
}

pub(crate) struct ModuleCx {
    m: FiniteModule,
    space: QuasiDivisorSpace,
    oracle: Option<Result<FiniteTopology, String>>,
    qs_fn: QuasiSecondFn,
    qs: bool,
    flags: Result<Flags, String>,
}

pub(crate) enum Context {
    Module(Result<Box<ModuleCx>, String>),
    Ring(Result<Box<FiniteRing>, String>),
}

impl Context {
    pub(crate) fn new(inst: &Instance, qs_fn: QuasiSecondFn) -> Self {
        match inst {
            Instance::Module(spec) => Context::Module(
                FiniteModule::build(spec)
                    .map(|m| Box::new(ModuleCx::new(m, qs_fn)))
                    .map_err(|e| e.to_string()),
            ),
            Instance::Ring(spec) => Context::Ring(FiniteRing::build(spec).map(Box::new).map_err(|e| e.to_string())),
        }
    }

    pub(crate) fn check(&self, rule: RuleId) -> Check {
        match self {
            Context::Module(Err(e)) | Context::Ring(Err(e)) => Check::Fail(Witness::new(format!("build failed: {e}"))),
            Context::Ring(Ok(r)) => match rule {
                RuleId::R14 => r14(r),
                RuleId::R15 => r15(r),
                _ => Check::Vacuous,
            },
            Context::Module(Ok(cx)) => {
                let out = cx.check(rule);
                let quantifies_scalars = matches!(rule, RuleId::R16 | RuleId::R21);
                match out {
                    Check::Pass if cx.space.is_empty() && !quantifies_scalars => Check::Vacuous,
                    other => other,
                }
            }
        }
    }
}

fn images_maximal(classes: &[ScalarClass]) -> Vec<bool> {
    classes
        .iter()
        .map(|a| {
            !classes
                .iter()
                .any(|b| a.image.len() < b.image.len() && a.image.is_subset(&b.image))
        })
        .collect()
}

impl ModuleCx {
    fn new(m: FiniteModule, qs_fn: QuasiSecondFn) -> Self {
        let space = QuasiDivisorSpace::build(&m);
        let oracle = (space.len() <= MAX_T5_POINTS)
            .then(|| FiniteTopology::enumerate(&space).map_err(|e| e.to_string()));
        let qs = qs_fn(&m);
        let sep = space.separation_report();
        let con = space.connectivity_report();
        let flags = match &oracle {
            None => Ok(Flags {
                t0: sep.t0,
                t1: sep.t1,
                t2: sep.t2,
                discrete: sep.discrete,
                metrizable: sep.metrizable,
                hyperconnected: con.hyperconnected,
                nested: con.nested,
            }),
            Some(Err(e)) => Err(e.clone()),
            Some(Ok(t)) => (|| {
                Ok(Flags {
                    t0: t.axiom(Axiom::T0)?,
                    t1: t.axiom(Axiom::T1)?,
                    t2: t.axiom(Axiom::T2)?,
                    discrete: t.axiom(Axiom::Discrete)?,
                    metrizable: sep.metrizable,
                    hyperconnected: t.axiom(Axiom::Hyperconnected)?,
                    nested: t.is_nested(),
                })
            })()
            .map_err(|e: crate::oracle::OracleError| e.to_string()),
        };
        ModuleCx {
            m,
            space,
            oracle,
            qs_fn,
            qs,
            flags,
        }
    }

    fn check(&self, rule: RuleId) -> Check {
        let flags = match &self.flags {
            Ok(f) => f,
            Err(e) => return Check::Fail(Witness::new(format!("oracle failed: {e}"))),
        };
        match rule {
            RuleId::R1 => Check::holds(flags.t0, || self.classes_witness("space is not T0")),
            RuleId::R2 => Check::holds(flags.t1 == self.qs, || {
                self.qs_witness(format!("T1 is {}, quasi second is {}", flags.t1, self.qs))
            }),
            RuleId::R3 => self.r3(flags),
            RuleId::R4 => self.r4(flags),
            RuleId::R5 => self.r5(flags),
            RuleId::R6 => self.r6(),
            RuleId::R7 => self.r7(),
            RuleId::R8 => self.r8(),
            RuleId::R9 => self.r9(),
            RuleId::R10 => self.r10(),
            RuleId::R11 => self.r11(),
            RuleId::R12 => self.r12(),
            RuleId::R13 => self.r13(flags),
            RuleId::R16 => self.r16(),
            RuleId::R17 => self.r17(),
            RuleId::R18 => self.r18(),
            RuleId::R19 => self.r19(),
            RuleId::R20 => self.r20(),
            RuleId::R21 => self.r21(),
            RuleId::R22 => self.r22(),
            RuleId::R14 | RuleId::R15 => Check::Vacuous,
        }
    }

    fn oracle(&self) -> Option<Result<&FiniteTopology, Check>> {
        self.oracle.as_ref().map(|o| {
            o.as_ref()
                .map_err(|e| Check::Fail(Witness::new(format!("oracle failed: {e}"))))
        })
    }

    fn image_set(&self, name: impl Into<String>, n: &Submodule) -> (String, Vec<String>) {
        (name.into(), self.m.format_submodule(n))
    }

    fn with_class(&self, w: Witness, c: &ScalarClass) -> Witness {
        let (name, elems) = self.image_set(format!("{}E", self.m.format_scalar(c.rep)), &c.image);
        w.scalar(self.m.format_scalar(c.rep)).set(name, elems)
    }

    fn with_scalar(&self, w: Witness, s: usize) -> Witness {
        let (name, elems) = self.image_set(format!("{}E", self.m.format_scalar(s)), self.m.cyclic_image(s));
        w.scalar(self.m.format_scalar(s)).set(name, elems)
    }

    fn classes_witness(&self, summary: impl Into<String>) -> Witness {
        self.space
            .classes()
            .iter()
            .fold(Witness::new(summary), |w, c| self.with_class(w, c))
    }

    /// A strictly nested pair `bE ⊊ aE` if one exists, otherwise all classes.
    fn qs_witness(&self, summary: String) -> Witness {
        if let Some((a, b)) = self.m.quasi_second_witness() {
            return self.with_scalar(self.with_scalar(Witness::new(summary), a), b);
        }
        let classes = self.space.classes();
        for (i, lo) in classes.iter().enumerate() {
            for (j, hi) in classes.iter().enumerate() {
                if i != j && self.space.le(i, j) {
                    return self.with_class(self.with_class(Witness::new(summary), hi), lo);
                }
            }
        }
        self.classes_witness(summary)
    }

    fn all_second(&self) -> Option<&ScalarClass> {
        self.space
            .classes()
            .iter()
            .find(|c| !self.m.is_second_submodule(&c.image))
    }

    fn non_maximal_ann(&self) -> Option<&ScalarClass> {
        self.space
            .classes()
            .iter()
            .find(|c| !self.m.submodule_annihilator(&c.image).maximal)
    }

    fn r3(&self, f: &Flags) -> Check {
        let all_max = images_maximal(self.space.classes()).into_iter().all(|b| b);
        let values = [
            ("quasi second", self.qs),
            ("all aE maximal", all_max),
            ("discrete", f.discrete),
            ("metrizable", f.metrizable),
            ("T2", f.t2),
            ("T1", f.t1),
        ];
        Check::holds(values.iter().all(|v| v.1 == values[0].1), || {
            let text: Vec<String> = values.iter().map(|(n, v)| format!("{n}={v}")).collect();
            self.qs_witness(text.join(", "))
        })
    }

    fn r4(&self, f: &Flags) -> Check {
        let (mult, uni) = match (self.m.is_multiplication(), self.m.is_uniserial()) {
            (Ok(a), Ok(b)) => (a, b),
            (Err(e), _) | (_, Err(e)) => return Check::Fail(Witness::new(e.to_string())),
        };
        if !mult {
            return Check::Vacuous;
        }
        Check::holds(uni == f.nested, || {
            let mut w = Witness::new(format!("uniserial is {uni}, nested is {}", f.nested));
            let classes = self.space.classes();
            'outer: for (i, a) in classes.iter().enumerate() {
                for (j, b) in classes.iter().enumerate().skip(i + 1) {
                    if !self.space.le(i, j) && !self.space.le(j, i) {
                        w = self.with_class(self.with_class(w, a), b);
                        break 'outer;
                    }
                }
            }
            w
        })
    }

    fn r5(&self, f: &Flags) -> Check {
        let crit = self.m.hyperconnected_criterion();
        Check::holds(crit == f.hyperconnected, || {
            let mut w = Witness::new(format!("criterion is {crit}, hyperconnected is {}", f.hyperconnected));
            let classes = self.space.classes();
            'outer: for a in classes {
                for b in classes {
                    let s = self.m.sum(&a.image, &b.image);
                    if !classes.iter().any(|x| s.is_subset(&x.image)) {
                        w = self.with_class(self.with_class(w, a), b);
                        let (n, e) = self.image_set("aE+bE", &s);
                        w = w.set(n, e);
                        break 'outer;
                    }
                }
            }
            w
        })
    }

    fn r6(&self) -> Check {
        let maximal = images_maximal(self.space.classes());
        for p in 0..self.space.len() {
            let singleton = match self.space.basis_set(p) {
                Ok(b) => b == PointSet::from([p]),
                Err(e) => return Check::Fail(Witness::new(e.to_string())),
            };
            let isolated = match self.oracle() {
                Some(Ok(t)) => t.is_open(1 << p),
                Some(Err(c)) => return c,
                None => self.space.is_open(&PointSet::from([p])),
            };
            if singleton != maximal[p] || isolated != maximal[p] {
                let w = Witness::new(format!(
                    "point {}: singleton basis {singleton}, isolated {isolated}, maximal image {}",
                    self.space.label(p),
                    maximal[p]
                ));
                return Check::Fail(self.with_class(w, &self.space.classes()[p]));
            }
        }
        Check::Pass
    }

    fn labels(&self, xs: &[usize]) -> Vec<String> {
        xs.iter().map(|&p| self.space.label(p).to_string()).collect()
    }

    fn r7(&self) -> Check {
        let t = match self.oracle() {
            None => return Check::Vacuous,
            Some(Err(c)) => return c,
            Some(Ok(t)) => t,
        };
        let mismatches = match cross_check(&self.space, t) {
            Ok(m) => m,
            Err(e) => return Check::Fail(Witness::new(e.to_string())),
        };
        if let Some(mm) = mismatches.iter().find(|m| m.check == "closure" || m.check == "interior") {
            return Check::Fail(
                Witness::new(format!("{} formula disagrees with the topology", mm.check))
                    .set("subset", self.labels(&mm.subset))
                    .set("formula", self.labels(&mm.fast))
                    .set("topology", self.labels(&mm.oracle)),
            );
        }
        Check::holds(t.structure_checks(&self.space).closure_union_ok, || {
            Witness::new("closure of a union differs from the union of closures")
        })
    }

    fn r8(&self) -> Check {
        let t = match self.oracle() {
            None => return Check::Vacuous,
            Some(Err(c)) => return c,
            Some(Ok(t)) => t,
        };
        let sc = t.structure_checks(&self.space);
        Check::holds(sc.open_dense_contains_maximal_ok && sc.minimal_neighborhoods_ok, || {
            let maximal: Vec<usize> = self.space.maximal_classes().into_iter().collect();
            Witness::new(format!(
                "dense opens contain maximal classes: {}, least neighborhoods: {}",
                sc.open_dense_contains_maximal_ok, sc.minimal_neighborhoods_ok
            ))
            .set("maximal classes", self.labels(&maximal))
        })
    }

    fn r9(&self) -> Check {
        let not_second = self.all_second();
        let semiprime = self.m.annihilator().semiprime;
        let converse_hyp = semiprime && not_second.is_none();
        if !self.qs && !converse_hyp {
            return Check::Vacuous;
        }
        if self.qs {
            if let Some(c) = not_second {
                return Check::Fail(self.with_class(Witness::new("quasi second but aE is not second"), c));
            }
        }
        Check::holds(self.qs || !converse_hyp, || {
            self.qs_witness("semiprime annihilator and every aE second, yet not quasi second".into())
        })
    }

    fn r10(&self) -> Check {
        if !self.qs {
            return Check::Vacuous;
        }
        match self.non_maximal_ann() {
            None => Check::Pass,
            Some(c) => {
                let ann = self.m.submodule_annihilator(&c.image);
                let w = self.with_class(Witness::new("quasi second but ann(aE) is not maximal"), c);
                Check::Fail(w.set("ann(aE)", ann.ideal.iter().map(|&s| self.m.format_scalar(s)).collect()))
            }
        }
    }

    fn comultiplication(&self) -> Result<bool, Check> {
        self.m
            .is_comultiplication()
            .map_err(|e| Check::Fail(Witness::new(e.to_string())))
    }

    fn r11(&self) -> Check {
        match self.comultiplication() {
            Err(c) => return c,
            Ok(false) => return Check::Vacuous,
            Ok(true) => {}
        }
        let second = self.all_second();
        let maximal = self.non_maximal_ann();
        let (ii, iii) = (second.is_none(), maximal.is_none());
        Check::holds(self.qs == ii && ii == iii, || {
            let w = self.qs_witness(format!(
                "quasi second {}, every aE second {ii}, every ann(aE) maximal {iii}",
                self.qs
            ));
            match second.or(maximal) {
                Some(c) => self.with_class(w, c),
                None => w,
            }
        })
    }

    fn comult_semiprime(&self) -> Result<bool, Check> {
        Ok(self.comultiplication()? && self.m.annihilator().semiprime)
    }

    fn r12(&self) -> Check {
        match self.comult_semiprime() {
            Err(c) => return c,
            Ok(false) => return Check::Vacuous,
            Ok(true) => {}
        }
        let split = self.m.weak_idempotent_split();
        let classified = !matches!(split, crate::module::WeakIdempotentSplit::None);
        Check::holds(self.qs == classified, || {
            self.qs_witness(format!("quasi second {}, simple or split {classified}", self.qs))
        })
    }

    fn r13(&self, f: &Flags) -> Check {
        match self.comult_semiprime() {
            Err(c) => return c,
            Ok(false) => return Check::Vacuous,
            Ok(true) => {}
        }
        let shape = self.space.is_empty() || (f.discrete && self.space.len() == 2);
        Check::holds(f.t1 == shape, || {
            self.classes_witness(format!(
                "T1 {}, empty or two-point discrete {shape} ({} points)",
                f.t1,
                self.space.len()
            ))
        })
    }

    fn r16(&self) -> Check {
        if !self.qs {
            return Check::Vacuous;
        }
        let subs = match self.m.submodules() {
            Ok(s) => s,
            Err(e) => return Check::Fail(Witness::new(e.to_string())),
        };
        for n in subs {
            for (kind, built) in [
                ("submodule", self.m.submodule_as_module(n)),
                ("quotient by", self.m.quotient(n)),
            ] {
                match built {
                    Ok(x) if (self.qs_fn)(&x) => {}
                    Ok(_) => {
                        let (name, e) = self.image_set(kind, n);
                        return Check::Fail(
                            Witness::new(format!("{kind} {} is not quasi second", name)).set(name, e),
                        );
                    }
                    Err(e) => return Check::Fail(Witness::new(e.to_string())),
                }
            }
        }
        Check::Pass
    }

    fn r17(&self) -> Check {
        let t = match self.oracle() {
            None => return Check::Vacuous,
            Some(Err(c)) => return c,
            Some(Ok(t)) => t,
        };
        let fast = self.space.separation_report().t3;
        let basis_closed = (0..self.space.len()).all(|p| {
            self.space
                .basis_set(p)
                .is_ok_and(|u| t.is_closed(to_mask(&u)))
        });
        match t.axiom(Axiom::T3) {
            Ok(oracle) => Check::holds(fast == oracle && oracle == basis_closed, || {
                self.classes_witness(format!(
                    "order rule {fast}, topology {oracle}, every U_a closed {basis_closed}"
                ))
            }),
            Err(e) => Check::Fail(Witness::new(e.to_string())),
        }
    }

    fn r18(&self) -> Check {
        if !self.m.annihilator().prime {
            return Check::Vacuous;
        }
        let t = match self.oracle() {
            None => return Check::Vacuous,
            Some(Err(c)) => return c,
            Some(Ok(t)) => t,
        };
        match (t.axiom(Axiom::Ultraconnected), t.axiom(Axiom::T4)) {
            (Ok(u), Ok(t4)) => Check::holds(u && t4, || {
                self.classes_witness(format!("ultraconnected {u}, T4 {t4}"))
            }),
            (Err(e), _) | (_, Err(e)) => Check::Fail(Witness::new(e.to_string())),
        }
    }

    fn r19(&self) -> Check {
        let k = self.m.component_count();
        if k < 2 || !self.m.annihilator().semiprime {
            return Check::Vacuous;
        }
        let s = self.m.scalars();
        let mut any = false;
        // Bipartitions containing component 0, so each split is seen once.
        for bits in 0..(1usize << (k - 1)) {
            let first: Vec<usize> = std::iter::once(0).chain((1..k).filter(|i| bits >> (i - 1) & 1 == 1)).collect();
            let second: Vec<usize> = (0..k).filter(|i| !first.contains(i)).collect();
            if second.is_empty() {
                continue;
            }
            let parts = [&first, &second].map(|c| {
                self.m
                    .component_submodule(c)
                    .ok_or_else(|| "no component submodule".to_string())
                    .and_then(|n| self.m.submodule_as_module(&n).map_err(|e| e.to_string()))
            });
            let [e1, e2] = match parts {
                [Ok(a), Ok(b)] => [a, b],
                [Err(e), _] | [_, Err(e)] => return Check::Fail(Witness::new(e)),
            };
            let hyp = s
                .elements()
                .filter(|&a| self.m.in_w_sharp(a))
                .all(|a| e1.in_w_sharp(a) && e2.in_w_sharp(a));
            if !hyp {
                continue;
            }
            any = true;
            let mut bad_ann = None;
            for a in s.elements().filter(|&a| e1.in_w_sharp(a) && e2.in_w_sharp(a)) {
                let m1 = e1.annihilator_mask(e1.cyclic_image(a));
                let m2 = e2.annihilator_mask(e2.cyclic_image(a));
                if m1 != m2 || !s.ideal_is_maximal(&m1) {
                    bad_ann = Some(a);
                    break;
                }
            }
            let (q1, q2) = ((self.qs_fn)(&e1), (self.qs_fn)(&e2));
            let rhs = q1 && q2 && bad_ann.is_none();
            if self.qs != rhs {
                let mut w = self.qs_witness(format!(
                    "split {first:?}|{second:?}: quasi second {}, parts {q1} and {q2}, annihilators agree and maximal {}",
                    self.qs,
                    bad_ann.is_none()
                ));
                if let Some(a) = bad_ann {
                    w = w
                        .scalar(s.format_elem(a))
                        .set("aE1", e1.format_submodule(e1.cyclic_image(a)))
                        .set("aE2", e2.format_submodule(e2.cyclic_image(a)));
                }
                return Check::Fail(w);
            }
        }
        if any {
            Check::Pass
        } else {
            Check::Vacuous
        }
    }

    fn r20(&self) -> Check {
        let s = self.m.scalars();
        let lifts: Option<Vec<Scalar>> = s.elements().map(|i| s.lift(i)).collect();
        let Some(lifts) = lifts else {
            return Check::Vacuous;
        };
        let w: Vec<usize> = s.elements().filter(|&a| self.m.in_w_sharp(a)).collect();
        if w.is_empty() {
            return Check::Vacuous;
        }
        let images: Vec<&Submodule> = self.space.images().iter().collect();
        let up = |img: &Submodule| -> Vec<bool> { images.iter().map(|x| img.is_subset(x)).collect() };
        for (i, &a) in w.iter().enumerate() {
            let (la, ia) = (&lifts[a], self.m.cyclic_image(a));
            for &b in &w[i..] {
                let (lb, ib) = (&lifts[b], self.m.cyclic_image(b));
                let fail = |what: &str| {
                    Check::Fail(self.with_scalar(self.with_scalar(Witness::new(what.to_string()), a), b))
                };
                for (x, y, ix, iy) in [(la, lb, ia, ib), (lb, la, ib, ia)] {
                    if x.divides(y).unwrap_or(false) && !iy.is_subset(ix) {
                        return fail("a divides b but bE is not inside aE");
                    }
                }
                let (ua, ub) = (up(ia), up(ib));
                if let Ok(g) = scalar_gcd(la, lb) {
                    if let Some(gi) = s.reduce(&g).filter(|&gi| self.m.in_w_sharp(gi)) {
                        let ug = up(self.m.cyclic_image(gi));
                        let meet: Vec<bool> = ua.iter().zip(&ub).map(|(x, y)| *x && *y).collect();
                        if ug != meet {
                            return fail(&format!("U at gcd {g} differs from the intersection"));
                        }
                    }
                }
                if let Ok(l) = scalar_lcm(la, lb) {
                    if let Some(li) = s.reduce(&l).filter(|&li| self.m.in_w_sharp(li)) {
                        let il = self.m.cyclic_image(li);
                        let bad = images.iter().any(|c| ia.is_subset(c) && ib.is_subset(c) && !il.is_subset(c));
                        if bad {
                            return fail(&format!("lcm {l} escapes a common upper bound"));
                        }
                    }
                }
            }
        }
        Check::Pass
    }

    fn samples(&self) -> Option<Vec<Scalar>> {
        match self.m.scalars().defining_modulus()? {
            Scalar::Int(n) => {
                let l: i64 = (&n).try_into().ok()?;
                let half = (l * 2).min(MAX_SAMPLES as i64 / 2);
                Some((-half..=half).map(|a| Scalar::Int(BigInt::from(a))).collect())
            }
            Scalar::Poly(f) => {
                let p = f.characteristic();
                let mut k = 2 * f.degree()?;
                while (p as usize).checked_pow(k as u32).is_none_or(|c| c > MAX_SAMPLES) {
                    k -= 1;
                }
                let count = (p as usize).pow(k as u32);
                Some(
                    (0..count)
                        .map(|mut i| {
                            let coeffs: Vec<u64> = (0..k)
                                .map(|_| {
                                    let c = (i % p as usize) as u64;
                                    i /= p as usize;
                                    c
                                })
                                .collect();
                            Scalar::Poly(Poly::new(p, coeffs))
                        })
                        .collect(),
                )
            }
        }
    }

    fn r21(&self) -> Check {
        let Some(samples) = self.samples() else {
            return Check::Vacuous;
        };
        let s = self.m.scalars();
        for a in &samples {
            let img = match self.m.image_of_scalar(a) {
                Ok(i) => i,
                Err(crate::module::ModuleError::Unsupported(_)) => return Check::Vacuous,
                Err(e) => return Check::Fail(Witness::new(e.to_string())),
            };
            let definitional = !img.is_zero() && img.len() != self.m.size();
            let Some(r) = s.reduce(a) else {
                return Check::Vacuous;
            };
            let residue = r != s.zero_idx() && !s.is_unit(r);
            if definitional != residue || &img != self.m.cyclic_image(r) {
                let (n, e) = self.image_set("aE", &img);
                return Check::Fail(
                    Witness::new(format!("definitional {definitional}, residue test {residue}"))
                        .scalar(a.to_string())
                        .scalar(s.format_elem(r))
                        .set(n, e),
                );
            }
        }
        Check::Pass
    }

    fn r22(&self) -> Check {
        if !self.m.annihilator().prime {
            return Check::Vacuous;
        }
        let cyclic = self
            .m
            .elements()
            .any(|x| self.m.generated_by(x).len() == self.m.size());
        if !cyclic {
            return Check::Vacuous;
        }
        let ring: RingSpec = self.m.scalars().spec().clone();
        let other = match FiniteModule::build(&ModuleSpec::CyclicOverRing { ring }) {
            Ok(o) => QuasiDivisorSpace::build(&o),
            Err(e) => return Check::Fail(Witness::new(e.to_string())),
        };
        match self.space.is_homeomorphic(&other) {
            Ok(h) => Check::holds(h, || {
                self.classes_witness(format!(
                    "{} points against {} for the quotient ring",
                    self.space.len(),
                    other.len()
                ))
            }),
            Err(_) => Check::Vacuous,
        }
    }
}

fn r14(r: &FiniteRing) -> Check {
    let brute = r.is_quasi_second_ring_brute();
    let class = r.classify_quasi_second();
    Check::holds(brute == (class != crate::ring::QuasiSecondClass::NotQuasiSecond), || {
        Witness::new(format!("brute force {brute}, classification {class:?}"))
    })
}

fn r15(r: &FiniteRing) -> Check {
    let target = match r.spec() {
        RingSpec::Idealize(base, _) => match FiniteRing::build(base) {
            Ok(b) if b.is_field() => None,
            Ok(_) => return Check::Vacuous,
            Err(e) => return Check::Fail(Witness::new(e.to_string())),
        },
        _ if r.is_field() => match r.idealize(1) {
            Ok(i) => Some(i),
            Err(e) => return Check::Fail(Witness::new(e.to_string())),
        },
        _ => return Check::Vacuous,
    };
    let ring = target.as_ref().unwrap_or(r);
    Check::holds(ring.is_quasi_second_ring_brute(), || {
        Witness::new(format!("{} is not a quasi second ring", ring.spec()))
    })
}
