use fricke::ideal::ideal_generators;
use fricke::Polynomial;

mod common;
use common::translate;

/// Rank-four relations in the one-letter coordinate names of [`common::LETTERS`].
const RELATIONS: [&str; 6] = [
    "l^2m^2n^2o^2-l^2m^2nou-l^2mn^2ot-l^2mno^2s-lm^2n^2or-lm^2no^2q-lmn^2o^2p-l^2m^2n^2-l^2m^2o^2+l^2mntu+l^2mosu-l^2n^2o^2+l^2nost+lm^2nru+lm^2oqu+lmn^2rt+lmo^2qs+ln^2opt+lno^2ps-m^2n^2o^2+m^2noqr+mn^2opr+mno^2pq+2l^2mns+2l^2mot+2l^2nou-l^2stu+2lm^2nq+2lm^2or+2lmn^2p+2lmo^2p+lmpu^2-lmqtu-lmrsu+2ln^2or+2lno^2q-lnptu+lnqt^2-lnrst-lopsu-loqst+lors^2+2m^2nou-m^2qru+2mn^2ot+2mno^2s-mnpru-mnqrt+mnr^2s-mopqu+moq^2t-moqrs-n^2prt+nop^2u-nopqt-noprs-o^2pqs-l^2s^2-l^2t^2-l^2u^2-2lmqs-2lmrt-2lnps-2lnru-2lopt-2loqu-m^2q^2-m^2r^2-m^2u^2-2mnpq-2mntu-2mopr-2mosu-n^2p^2-n^2r^2-n^2t^2-2noqr-2nost-o^2p^2-o^2q^2-o^2s^2-p^2u^2+2pqtu+2prsu-q^2t^2+2qrst-r^2s^2-4lmp-4lnq-4lor-4mns-4mot-4nou+4pqs+4prt+4qru+4stu+4l^2+4m^2+4n^2+4o^2+4p^2+4q^2+4r^2+4s^2+4t^2+4u^2-16",
    "lmnv-lmp-lnq-lsv-mns-mqv-npv+pqs+l^2+m^2+n^2+p^2+q^2+s^2+v^2-4",
    "lmow-lmp-lor-ltw-mot-mrw-opw+prt+l^2+m^2+o^2+p^2+r^2+t^2+w^2-4",
    "lnox-lnq-lor-lux-nou-nrx-oqx+qru+l^2+n^2+o^2+q^2+r^2+u^2+x^2-4",
    "mnoy-mns-mot-muy-nou-nty-osy+stu+m^2+n^2+o^2+s^2+t^2+u^2+y^2-4",
    "lmuz-lmp-lux-lyz-muy-mxz-puz+pxy+l^2+m^2+p^2+u^2+x^2+y^2+z^2-4",
];

#[test]
fn translation_helper() {
    assert_eq!(
        translate("2l^2mns-pz"),
        Polynomial::parse(4, "2*a^2*b*c*bc - ab*abcd").unwrap()
    );
}

#[test]
fn split_generators_match_exactly() {
    let ideal = ideal_generators(4).unwrap();
    assert_eq!(ideal.len(), 6);
    for (i, g) in ideal.generators.iter().enumerate().skip(1) {
        assert_eq!(
            g.poly,
            translate(RELATIONS[i]),
            "generator {} for {}",
            i + 1,
            g.spec.target.name()
        );
        assert_eq!(g.poly.total_degree(), 4);
        assert_eq!(g.target_degree(), 2);
    }
}

#[test]
fn pair_generator_has_degree_eight() {
    let ideal = ideal_generators(4).unwrap();
    let g = &ideal.generators[0];
    assert_eq!(g.spec.target.name(), "cd");
    assert_eq!(g.poly.total_degree(), 8);
    let printed = translate(RELATIONS[0]);
    assert_eq!(printed.total_degree(), 8);
    assert_eq!(g.poly, printed);
}
