//! Connected graded Hopf algebras presented by generators and a coproduct
//! table, and the two concrete instances used throughout the crate.

mod instances;
mod spec;

pub use instances::{
    faa_di_bruno_spec, faa_di_bruno_spec_oriented, instance, ladder_spec, FaaDiBrunoOrientation,
    FAA_DI_BRUNO_CONVENTION,
};
pub use spec::{
    hopf_product, render_tensor, CoproductTerm, HopfAlgebraSpec, HopfElement, HopfGenerator, HopfMonomial,
    HopfWordElement,
};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use crate::linear::Combination;

    fn basis(m: HopfMonomial) -> HopfElement {
        Combination::basis(m)
    }

    #[test]
    fn ladder_coproducts() {
        let spec = ladder_spec(6).unwrap();
        let l1 = spec.generator(0);
        let l2 = spec.generator(1);
        let l3 = spec.generator(2);
        let one = HopfMonomial::one();

        let d = spec.coproduct(&basis(l2.clone())).unwrap();
        assert_eq!(d.len(), 3);
        assert_eq!(d.coeff(&vec![l1.clone(), l1.clone()]), rat(1, 1));
        assert_eq!(d.coeff(&vec![one.clone(), l2.clone()]), rat(1, 1));

        assert_eq!(
            spec.coproduct(&basis(one.clone())).unwrap(),
            Combination::basis(vec![one.clone(), one.clone()])
        );

        let l1sq = l1.mul(&l1);
        let d = spec.coproduct(&basis(l1sq.clone())).unwrap();
        assert_eq!(d.coeff(&vec![l1.clone(), l1.clone()]), rat(2, 1));
        assert_eq!(d.coeff(&vec![one.clone(), l1sq.clone()]), rat(1, 1));
        assert_eq!(d.coeff(&vec![l1sq.clone(), one.clone()]), rat(1, 1));
        assert_eq!(d.len(), 3);

        assert!(spec.reduced_coproduct(&basis(l1.clone())).unwrap().is_zero());
        let d = spec.reduced_coproduct(&basis(l3.clone())).unwrap();
        assert_eq!(d.len(), 2);
        assert_eq!(d.coeff(&vec![l1.clone(), l2.clone()]), rat(1, 1));
        assert_eq!(d.coeff(&vec![l2.clone(), l1.clone()]), rat(1, 1));
        assert_eq!(
            spec.reduced_coproduct(&basis(l1sq)).unwrap(),
            Combination::term(vec![l1.clone(), l1.clone()], rat(2, 1))
        );
    }

    #[test]
    fn ladder_iterated() {
        let spec = ladder_spec(6).unwrap();
        let l1 = spec.generator(0);
        let l3 = basis(spec.generator(2));
        assert_eq!(
            spec.iterated_reduced_coproduct(&l3, 3).unwrap(),
            Combination::basis(vec![l1.clone(), l1.clone(), l1])
        );
        assert!(spec.iterated_reduced_coproduct(&l3, 4).unwrap().is_zero());
        let one_fold = spec.iterated_reduced_coproduct(&l3, 1).unwrap();
        assert_eq!(one_fold, Combination::basis(vec![spec.generator(2)]));
    }

    #[test]
    fn truncation_and_augmentation_errors() {
        let spec = ladder_spec(2).unwrap();
        let l2 = spec.generator(1);
        let big = basis(l2.mul(&l2));
        assert!(matches!(
            spec.coproduct(&big),
            Err(crate::Error::DegreeExceedsTruncation { degree: 4, truncation: 2 })
        ));
        let mixed = &basis(HopfMonomial::one()) + &basis(l2);
        assert_eq!(spec.reduced_coproduct(&mixed), Err(crate::Error::NotAugmented));
    }

    #[test]
    fn coassociativity_of_instances() {
        assert_eq!(ladder_spec(6).unwrap().check_coassociativity(6), Ok(()));
        assert_eq!(faa_di_bruno_spec(6).unwrap().check_coassociativity(6), Ok(()));
        assert_eq!(
            faa_di_bruno_spec_oriented(6, FaaDiBrunoOrientation::InnerLeft)
                .unwrap()
                .check_coassociativity(6),
            Ok(())
        );
    }

    #[test]
    fn faa_di_bruno_low_degrees() {
        let spec = faa_di_bruno_spec(3).unwrap();
        let a1 = spec.generator(0);
        let a2 = spec.generator(1);
        let a3 = spec.generator(2);
        assert!(spec.reduced_coproduct(&basis(a1.clone())).unwrap().is_zero());
        // x^3 coefficient of f(g(x)) is u2 + v2 + 2 u1 v1
        assert_eq!(
            spec.reduced_coproduct(&basis(a2.clone())).unwrap(),
            Combination::term(vec![a1.clone(), a1.clone()], rat(2, 1))
        );
        // x^4 coefficient: u3 + v3 + 2 u1 v2 + u1 v1^2 + 3 u2 v1
        let d = spec.reduced_coproduct(&basis(a3)).unwrap();
        assert_eq!(d.len(), 3);
        assert_eq!(d.coeff(&vec![a1.clone(), a2.clone()]), rat(2, 1));
        assert_eq!(d.coeff(&vec![a1.clone(), a1.mul(&a1)]), rat(1, 1));
        assert_eq!(d.coeff(&vec![a2.clone(), a1.clone()]), rat(3, 1));
    }

    #[test]
    fn monomial_enumeration() {
        let spec = ladder_spec(6).unwrap();
        // partitions of 1..=6
        assert_eq!(spec.monomials().len(), 1 + 2 + 3 + 5 + 7 + 11);
        let degrees: Vec<u32> = spec.monomials().iter().map(HopfMonomial::degree).collect();
        assert!(degrees.windows(2).all(|w| w[0] <= w[1]));
        assert_eq!(spec.render(&spec.monomial(&[0, 1, 0])), "l1^2*l2");
        for m in spec.monomials() {
            assert_eq!(&spec.parse_monomial(&spec.render(m)).unwrap(), m);
        }
        assert_eq!(spec.parse_monomial("l2 * l1^2").unwrap(), spec.monomial(&[0, 0, 1]));
        assert!(spec.parse_monomial("1").unwrap().is_one());
        assert!(spec.parse_monomial("l9").is_err());
        assert!(spec.parse_monomial("l1^0").is_err());
    }

    #[test]
    fn invalid_tables_are_rejected() {
        let gens = vec![
            HopfGenerator { name: "x".into(), degree: 1 },
            HopfGenerator { name: "y".into(), degree: 2 },
        ];
        let scratch = HopfAlgebraSpec::new("t", gens.clone(), vec![vec![], vec![]], 2).unwrap();
        let x = scratch.generator(0);
        let y = scratch.generator(1);
        // x (x) y has total degree 3 in the coproduct of a degree-2 generator
        let bad = vec![vec![], vec![(x.clone(), y, rat(1, 1))]];
        assert!(HopfAlgebraSpec::new("t", gens.clone(), bad, 2).is_err());
        let bad = vec![vec![], vec![(HopfMonomial::one(), x, rat(1, 1))]];
        assert!(HopfAlgebraSpec::new("t", gens, bad, 2).is_err());
    }

    #[test]
    fn antipode_of_ladder_generators() {
        let spec = ladder_spec(3).unwrap();
        let l1 = spec.generator(0);
        let l2 = spec.generator(1);
        assert_eq!(
            spec.antipode(&basis(l1.clone())).unwrap(),
            Combination::term(l1.clone(), rat(-1, 1))
        );
        // S(l2) = -l2 + l1^2
        let s = spec.antipode(&basis(l2.clone())).unwrap();
        assert_eq!(s.coeff(&l2), rat(-1, 1));
        assert_eq!(s.coeff(&l1.mul(&l1)), rat(1, 1));
    }
}
