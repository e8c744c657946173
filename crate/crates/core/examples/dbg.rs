use vvmf_core::discform::*;
use vvmf_core::lattice::validate_lattice;
use vvmf_core::matrix::IntegerMatrix;
fn main() {
    let l = validate_lattice(IntegerMatrix::from_rows(&[vec![0, 2], vec![2, 0]])).unwrap();
    let d = discriminant_group(&l).unwrap();
    println!("divisors {:?} order {}", d.elementary_divisors(), d.order());
    for x in d.elements() {
        println!("{} lift {:?} q {:?}", x, d.lift(&x).iter().map(vvmf_core::rat::format_rat).collect::<Vec<_>>(), vvmf_core::rat::format_rat(d.q_disc(&x).value()));
    }
}
