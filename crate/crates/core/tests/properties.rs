use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use schubert3::diagram::gauss::dt_from_gauss;
use schubert3::diagram::{build_diagram_of, gauss_code};
use schubert3::oracle::enumerate::valid_forms;
use schubert3::oracle::fox::{abelianization, alexander_from_gauss, alexander_polynomial};
use schubert3::oracle::matrix::{smith_normal_form, IntegerMatrix};
use schubert3::presentation::{
    over_presentation_of, over_relations_of, rho, under_presentation, under_presentation_of,
};
use schubert3::{classify, orient, Butterfly, SchubertForm, Shape};

fn matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(-9i64..=9, c), r)
    })
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = combinations(n - 1, k);
    for mut c in combinations(n - 1, k - 1) {
        c.push(n - 1);
        out.push(c);
    }
    out
}

/// `k`-th determinantal divisor: gcd of all `k × k` minors.
fn determinantal_divisor(a: &IntegerMatrix, k: usize) -> BigInt {
    let mut g = BigInt::zero();
    for rows in combinations(a.rows(), k) {
        for cols in combinations(a.cols(), k) {
            g = g.gcd(&a.minor(&rows, &cols));
        }
    }
    g
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn smith_form_against_minors(rows in matrix()) {
        let a = IntegerMatrix::from_rows(&rows);
        let snf = smith_normal_form(&a);
        prop_assert_eq!(snf.u.mul(&a).mul(&snf.v), snf.d.clone());
        prop_assert!(snf.u.determinant().abs().is_one());
        prop_assert!(snf.v.determinant().abs().is_one());
        let diag = snf.diagonal();
        for w in diag.windows(2) {
            if !w[1].is_zero() {
                prop_assert!((&w[1] % &w[0]).is_zero());
            }
        }
        let mut product = BigInt::one();
        for (k, d) in diag.iter().enumerate() {
            product *= d;
            prop_assert_eq!(product.abs(), determinantal_divisor(&a, k + 1));
        }
    }
}

fn sample_forms() -> &'static [SchubertForm] {
    static FORMS: std::sync::OnceLock<Vec<SchubertForm>> = std::sync::OnceLock::new();
    FORMS.get_or_init(|| valid_forms(9))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn invariants_of_random_forms(idx in any::<prop::sample::Index>()) {
        let forms = sample_forms();
        let f = forms[idx.index(forms.len())];
        let bf = Butterfly::new(f).unwrap();
        let class = classify(&f).unwrap();
        if let Some(k) = class.components {
            let o = orient(&bf).unwrap();
            let d = build_diagram_of(&bf, Some(&o));
            prop_assert_eq!(d.component_count(), k as usize);
            prop_assert_eq!(d.stray_intersections(), 0);

            let set = bf.vertex_set();
            for x in set.iter().filter(|&x| !set.is_endpoint(x)) {
                let y = bf.gamma().apply(x);
                prop_assert_eq!(rho(y, &bf, &o).unwrap(), rho(x, &bf, &o).unwrap().inverse());
            }

            let over = over_presentation_of(&bf, &o).unwrap();
            let rel = over_relations_of(&bf, &o).unwrap();
            let under = under_presentation_of(&bf, &o).unwrap();
            let h = abelianization(&over);
            prop_assert_eq!(&h, &abelianization(&rel));
            prop_assert_eq!(&h, &abelianization(&under));
            prop_assert_eq!(h.free_rank, k as usize);
            prop_assert_eq!(over.total_relator_length(), 2 * (f.p() + f.q() + f.s()) as usize);
            for r in &under.relators {
                prop_assert_eq!(r.abelianize().iter().map(|x| x.abs()).sum::<i64>() % 2, 0);
            }

            let code = gauss_code(&f).unwrap();
            prop_assert!(code.is_well_formed());
            prop_assert_eq!(code.components.len(), k as usize);
            prop_assert_eq!(code.crossing_count(), f.crossing_count());
            if over.shape == Shape::Knot {
                let dt = dt_from_gauss(&f, &code).unwrap();
                let flags: Vec<bool> = code.components[0].iter().map(|e| e.over).collect();
                prop_assert_eq!(dt.decode().unwrap(), flags);
                let a = alexander_polynomial(&over).unwrap();
                prop_assert_eq!(alexander_from_gauss(&code).unwrap(), a);
            }
        } else {
            let d = build_diagram_of(&bf, None);
            prop_assert!(!d.trace_components().is_empty());
            prop_assert_eq!(d.stray_intersections(), 0);
        }
    }
}

#[test]
fn diagram_alexander_matches_presentations() {
    for f in valid_forms(7) {
        let bf = Butterfly::new(f).unwrap();
        if classify(&f).unwrap().components != Some(1) {
            continue;
        }
        let o = orient(&bf).unwrap();
        let a = alexander_polynomial(&over_presentation_of(&bf, &o).unwrap()).unwrap();
        let g = alexander_from_gauss(&gauss_code(&f).unwrap()).unwrap();
        assert_eq!(a, g, "{f}");
    }
}

#[test]
fn drawings_are_planar() {
    for f in valid_forms(6) {
        let bf = Butterfly::new(f).unwrap();
        assert_eq!(build_diagram_of(&bf, None).stray_intersections(), 0, "{f}");
    }
}

#[test]
fn under_presentation_of_raw_forms() {
    // unordered entries, still a butterfly
    let f = SchubertForm::new(3, 1, 4, 2, 4, 1).unwrap();
    let g = under_presentation(&f).unwrap();
    let lengths: Vec<usize> = g.relations.iter().flatten().map(|r| r.word.len()).collect();
    assert_eq!(lengths, [2, 3, 3]);
}
