mod common;

use common::replicated;
use proptest::prelude::*;
use replicated_core::algebra::*;
use replicated_core::replicated::*;
use replicated_core::Error;

fn quivers() -> Vec<Quiver> {
    vec![Quiver::one_vertex(), Quiver::a2(), Quiver::a3_linear(), Quiver::kronecker()]
}

#[test]
fn hereditary_dimensions() {
    assert_eq!(build_hereditary(&Quiver::one_vertex()).unwrap().dim(), 1);
    let k = build_hereditary(&Quiver::kronecker()).unwrap();
    assert_eq!(k.dim(), 4);
    assert_eq!(k.labels(), &["e1", "e2", "a", "b"]);
    let a3 = build_hereditary(&Quiver::a3_linear()).unwrap();
    assert_eq!(a3.dim(), 6);
    for q in quivers() {
        let a = build_hereditary(&q).unwrap();
        assert!(global_dimension(&a, 4).is_at_most(1));
    }
}

#[test]
fn quiver_validation() {
    assert!(matches!(Quiver::new(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")]), Err(Error::CyclicQuiver(_))));
    assert!(matches!(Quiver::new(&["1"], &[("a", "1", "1")]), Err(Error::CyclicQuiver(_))));
    assert!(matches!(Quiver::new(&["1", "1"], &[]), Err(Error::DuplicateLabel(_))));
    assert!(matches!(Quiver::new(&["1", "2"], &[("a", "2", "1"), ("a", "2", "1")]), Err(Error::DuplicateLabel(_))));
    assert!(matches!(Quiver::new(&["1"], &[("a", "1", "3")]), Err(Error::UnknownVertex(_))));
    assert!(!Quiver::new(&["1", "2"], &[]).unwrap().is_connected());
}

#[test]
fn replicated_dimensions() {
    for q in quivers() {
        let base = build_hereditary(&q).unwrap().dim();
        for m in 0..=3 {
            let r = replicated(&q, m);
            assert_eq!(r.algebra().dim(), (2 * m + 1) * base);
            assert_eq!(r.algebra().vertex_count(), (m + 1) * q.vertex_count());
        }
    }
    let r = replicated(&Quiver::one_vertex(), 2);
    assert_eq!(r.algebra().dim(), 5);
    assert_eq!(r.algebra().loewy_length(), 2);
    let r = replicated(&Quiver::kronecker(), 1);
    assert_eq!(r.algebra().dim(), 12);
    assert_eq!(r.algebra().arrows().len(), 6);
    assert_eq!(r.vertex_labels(), vec!["1", "2", "1'", "2'"]);
    // Arrows 1 ⇇ 2 ⇇ 1' ⇇ 2' (arrows point from source to target vertex).
    let a = r.algebra();
    assert_eq!((a.arrow_count(1, 0), a.arrow_count(2, 1), a.arrow_count(3, 2)), (2, 2, 2));
    // m = 0 is the path algebra itself, up to basis labels.
    let r0 = replicated(&Quiver::kronecker(), 0);
    let (a, b) = (r0.algebra(), r0.base());
    assert_eq!(a.dim(), b.dim());
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            assert_eq!(a.product(i, j), b.product(i, j));
        }
    }
}

#[test]
fn dual_products_vanish() {
    let r = replicated(&Quiver::kronecker(), 2);
    let a = r.algebra();
    let duals: Vec<usize> =
        r.tags().iter().enumerate().filter(|(_, t)| matches!(t, BasisTag::Dual { .. })).map(|(i, _)| i).collect();
    assert_eq!(duals.len(), 2 * 4);
    for &i in &duals {
        for &j in &duals {
            assert!(a.product(i, j).is_empty());
        }
    }
    // Idempotents sum to the unit.
    let mut sum = vec![replicated_core::Rational::zero(); a.dim()];
    for e in a.idempotents() {
        for (s, c) in sum.iter_mut().zip(&e.coords) {
            *s += c;
        }
    }
    assert_eq!(sum, a.unit());
}

#[test]
fn embeddings() {
    let q = Quiver::kronecker();
    let r = replicated(&q, 1);
    let base = r.base().clone();
    let reg = r.embed(&ModuleRep::regular(base.clone()), 0).unwrap();
    let ps = direct_sum(r.algebra(), &[r.projective(0, 0), r.projective(1, 0)]).0;
    assert!(is_isomorphic(&reg, &ps, 0).unwrap().is_some());
    let s1 = r.embed(&ModuleRep::simple(base.clone(), 0), 0).unwrap();
    assert_eq!(s1.dims(), &[1, 0, 0, 0]);
    let i2 = r.embed(&ModuleRep::injective(base.clone(), 1), 1).unwrap();
    assert_eq!(i2.dims(), &[0, 0, 0, 1]);
    assert!(iso_indecomposable(&i2, &r.injective(1, 1)).is_some());
    let i1 = r.embed(&ModuleRep::injective(base.clone(), 0), 1).unwrap();
    assert_eq!(i1.dims(), &[0, 0, 1, 2]);
    assert!(iso_indecomposable(&i1, &r.injective(0, 1)).is_some());
    assert!(matches!(r.embed(&i1, 0), Err(Error::AlgebraMismatch)));
    assert!(matches!(r.embed(&ModuleRep::simple(base, 0), 2), Err(Error::CopyOutOfRange { copy: 2, m: 1 })));
}

#[test]
fn embedding_is_full() {
    let q = Quiver::kronecker();
    let r = replicated(&q, 2);
    let base = r.base().clone();
    let mods: Vec<ModuleRep> = (0..2)
        .flat_map(|v| {
            [
                ModuleRep::projective(base.clone(), v),
                ModuleRep::injective(base.clone(), v),
                ModuleRep::simple(base.clone(), v),
            ]
        })
        .collect();
    for c in 0..=2 {
        for x in &mods {
            for y in &mods {
                let ex = r.embed(x, c).unwrap();
                let ey = r.embed(y, c).unwrap();
                assert_eq!(hom_dim(&ex, &ey), hom_dim(x, y));
            }
        }
    }
}

#[test]
fn restriction_and_inflation() {
    let q = Quiver::a2();
    let r = replicated(&q, 1);
    let amb = replicated(&q, 3);
    for s in 0..r.algebra().vertex_count() {
        let p = r.projective(s % 2, s / 2);
        let up = r.inflate_to(&amb, &p).unwrap();
        assert!(up.check_relations().is_ok());
        let back = r.restrict_from(&amb, &up).unwrap();
        assert!(iso_indecomposable(&back, &p).is_some());
    }
    let top = amb.projective(0, 3);
    assert!(r.restrict_from(&amb, &top).is_err());
}

#[test]
fn projective_injectives() {
    let r = replicated(&Quiver::kronecker(), 1);
    let pis = r.projective_injectives();
    let dims: Vec<Vec<usize>> = pis.iter().map(|(_, p)| p.dims().to_vec()).collect();
    assert_eq!(dims, vec![vec![1, 2, 1, 0], vec![0, 1, 2, 1]]);
    let r = replicated(&Quiver::one_vertex(), 1);
    let pis = r.projective_injectives();
    assert_eq!(pis.len(), 1);
    assert_eq!(pis[0].1.dims(), &[1, 1]);
    // A_2 itself: P2 = I1.
    let r = replicated(&Quiver::a2(), 0);
    let pis = r.projective_injectives();
    assert_eq!(pis.len(), 1);
    assert_eq!(pis[0].0, 1);
    assert_eq!(pis[0].1.socle_multiplicities(), vec![1, 0]);
    assert_eq!(pis[0].1.top_multiplicities(), vec![0, 1]);
}

#[test]
fn sigma_layers_of_kronecker() {
    let q = Quiver::kronecker();
    let amb = replicated(&q, ambient_copies(1));
    let layers = sigma_layers(&amb, 1, 2, 0).unwrap();
    let dims = |k: usize| -> Vec<Vec<usize>> {
        let mut d: Vec<Vec<usize>> = layers[k].modules.iter().map(|s| s.module.dims()[..4].to_vec()).collect();
        d.sort();
        d
    };
    assert_eq!(dims(0), vec![vec![1, 0, 0, 0], vec![2, 1, 0, 0]]);
    assert_eq!(dims(1), vec![vec![0, 2, 1, 0], vec![0, 3, 2, 0]]);
    assert_eq!(dims(2), vec![vec![0, 0, 3, 2], vec![0, 0, 4, 3]]);
    assert!(layers.iter().all(|l| l.modules.iter().all(|s| s.in_a_m)));
    assert!(matches!(sigma_layers(&replicated(&q, 1), 1, 3, 0), Err(Error::AmbientTooSmall(_))));
}

#[test]
fn generators() {
    let q = Quiver::kronecker();
    let g = auslander_generator(&q, 1, 8, 0).unwrap();
    assert_eq!(g.summands.len(), 10);
    assert_eq!(g.gl_dim, Bounded::Exact(3));
    assert_eq!(g.labels(), vec!["P1", "P2", "I1'", "I2'", "P1'", "P2'", "U1.1", "U1.2", "U2.1", "U2.2"]);
    assert_eq!(g.module().dim(), [1, 3, 1, 3, 4, 4, 3, 5, 5, 7].iter().sum::<usize>());
    let g0 = minimal_cogenerator(&q, 1, 8, 0).unwrap();
    assert_eq!(g0.summands.len(), 6);
    // One vertex, m=1: the two simples and the projective-injective.
    let one = minimal_cogenerator(&Quiver::one_vertex(), 1, 8, 0).unwrap();
    assert_eq!(one.summands.len(), 3);
    let one = auslander_generator(&Quiver::one_vertex(), 1, 8, 0).unwrap();
    let dims: Vec<Vec<usize>> = one.modules().iter().map(|x| x.dims().to_vec()).collect();
    assert!(dims.contains(&vec![1, 0]) && dims.contains(&vec![0, 1]) && dims.contains(&vec![1, 1]));
}

#[test]
fn generator_contains_all_projectives_and_injectives() {
    for q in quivers() {
        for m in 1..=2 {
            let g = auslander_generator(&q, m, 4 * m + 4, 0).unwrap();
            let alg = g.algebra.algebra();
            let mods = g.modules();
            let t = g.gl_dim.value();
            assert!(g.summands.iter().all(|s| match s.kind {
                SummandKind::Layer(k) => (1..t).contains(&k),
                _ => true,
            }));
            for s in 0..alg.vertex_count() {
                for x in [ModuleRep::projective(alg.clone(), s), ModuleRep::injective(alg.clone(), s)] {
                    assert!(mods.iter().any(|y| iso_indecomposable(&x, y).is_some()), "{:?} m={m}", q.vertices());
                }
            }
            for (i, a) in mods.iter().enumerate() {
                assert!(is_indecomposable(a));
                for b in &mods[i + 1..] {
                    assert!(iso_indecomposable(a, b).is_none());
                }
            }
        }
    }
}

#[test]
fn ladder_covers_are_projective_injective() {
    for q in quivers() {
        for m in 1..=2 {
            let g = auslander_generator(&q, m, 4 * m + 4, 0).unwrap();
            let pis: Vec<ModuleRep> = g.algebra.projective_injectives().into_iter().map(|(_, p)| p).collect();
            for layer in g.layers.iter().skip(1) {
                for sm in layer.modules.iter().filter(|s| s.in_a_m) {
                    let x = g.algebra.restrict_from(&g.ambient, &sm.module).unwrap();
                    if g.algebra.support_copies(&x) == vec![0] {
                        continue;
                    }
                    let c = projective_cover(&x);
                    assert!(c.module.is_injective());
                    // Approximations by add(U_k ⊕ P) are onto.
                    let mut class: Vec<ModuleRep> = pis.clone();
                    for s in g.summands.iter().filter(|s| s.kind == SummandKind::Layer(layer.k)) {
                        class.push(s.module.clone());
                    }
                    let add = AddCategory::new(class).unwrap();
                    assert!(add.right_approximation(&x).map.is_surjective());
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 16, ..ProptestConfig::default() })]

    #[test]
    fn replicated_structure_is_associative_and_graded(qi in 0..4usize, m in 0..3usize) {
        let q = &quivers()[qi];
        let r = replicated(q, m);
        prop_assert_eq!(r.algebra().dim(), (2 * m + 1) * r.base().dim());
        // Copy index never decreases along a product of basis elements.
        let copy = |i: usize| match r.tags()[i] {
            BasisTag::Path { copy, .. } => (copy, copy),
            BasisTag::Dual { slot, .. } => (slot, slot - 1),
        };
        for i in 0..r.algebra().dim() {
            for j in 0..r.algebra().dim() {
                for (k, _) in r.algebra().product(i, j) {
                    prop_assert_eq!(copy(*k).0, copy(i).0);
                    prop_assert_eq!(copy(*k).1, copy(j).1);
                }
            }
        }
    }

    #[test]
    fn gl_dim_sandwich(qi in 0..4usize, m in 0..3usize) {
        let q = &quivers()[qi];
        let r = replicated(q, m);
        let g = global_dimension(r.base(), 4).value();
        let t = global_dimension(r.algebra(), 4 * m + 4).value();
        prop_assert!(m + g <= t && t <= (m + 1) * g + m);
    }
}
