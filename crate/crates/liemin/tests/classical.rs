//! Closed-form minimal polynomials for the block parabolics of the
//! classical families, standard representation.

mod support;

use support::classical;

#[test]
fn gl_standard() {
    classical::gl_standard();
}

#[test]
fn b_standard() {
    classical::b_standard();
}

#[test]
fn c_standard() {
    classical::c_standard();
}

#[test]
fn d_standard() {
    classical::d_standard();
}
