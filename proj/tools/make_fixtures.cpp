// Regenerates the fixture library consumed by the acceptance battery and by
// the command-line examples in the top-level README.
//
//   usage: make_fixtures [output-directory]   (default: fixtures)
//
// Every structure file is written through the canonical serializer, so the
// checked-in fixtures double as format references. The expected verification
// outcome of each file is documented in fixtures/README.md and pinned by
// tests/acceptance.cpp.

#include "l2v/builtin.hpp"
#include "l2v/crossed_module.hpp"
#include "l2v/io.hpp"
#include "l2v/omni.hpp"
#include "l2v/sh_leibniz.hpp"

#include <fstream>
#include <iostream>
#include <string>

using namespace l2v;
namespace bi = l2v::builtin;

namespace {

void put(const std::string& dir, const std::string& name, const Structure& s) {
    const std::string path = dir + "/" + name;
    save_structure(s, path);
    std::cout << "wrote " << path << "\n";
}

} // namespace

int main(int argc, char** argv) {
    const std::string dir = argc > 1 ? argv[1] : "fixtures";
    try {
        put(dir, "sh-abelian.json", bi::sh_from_algebra(bi::abelian_leibniz(2)));
        put(dir, "sh-dg-nilpotent.json", bi::dg_nilpotent());
        put(dir, "sh-skeletal-l3.json", bi::skeletal_l3());
        put(dir, "sh-broken-jacobi.json", bi::sh_from_algebra(bi::broken_pair()));

        // Well-shaped but inconsistent: d is the identity on a (1,1) complex
        // and the only nonzero bracket is l2(e1, m1) = m1, so the chain
        // compatibility (a) fails at (e1,m1).
        ShLeibniz2 broken_chain = ShLeibniz2::zero(1, 1, Mat{{Rat(1)}});
        broken_chain.l2_01.at_mut({0, 0}) = basis_vec(1, 0);
        put(dir, "sh-broken-chain.json", broken_chain);

        put(dir, "crossed-adjoint.json", bi::adjoint_crossed(bi::heisenberg3()));
        put(dir, "crossed-bad-peiffer.json", bi::crossed_zero_actions());
        put(dir, "quad-skeletal.json", skeletal_to_quadruple(bi::skeletal_l3()));

        {
            TwoTermComplex c = TwoTermComplex::make(2, 2, mat_identity(2));
            put(dir, "end-auto-identity.json",
                EndAutoFile{c, DglaAutomorphism::identity(build_end(c))});
        }
        {
            TwoTermComplex c = TwoTermComplex::zero_d(2, 2);
            EndDgla e = build_end(c);
            DglaAutomorphism f = DglaAutomorphism::identity(e);
            f.f1.m = mat_scale(Rat(2), f.f1.m); // valid: the differential vanishes
            put(dir, "end-auto-scale.json", EndAutoFile{c, f});
        }
        {
            TwoTermComplex c = TwoTermComplex::zero_d(1, 1);
            EndDgla e = build_end(c);
            DglaAutomorphism f = DglaAutomorphism::identity(e);
            f.f1 = LinearMap::zero(e.deg1, e.deg1); // not invertible
            put(dir, "end-auto-singular.json", EndAutoFile{c, f});
        }

        put(dir, "tca-r3.json", bi::tca_r3());
        put(dir, "tca-r4.json", bi::tca_r4());
        put(dir, "tp-r3.json", bi::tp_r3());
        put(dir, "tp-r5.json", bi::tp_r5());
        put(dir, "tp-bad.json", bi::tp_bad());

        {
            VerifyReport r = check_leibniz(bi::broken_pair());
            r.seed = 7;
            put(dir, "report-sample.json", r);
        }

        {
            const std::string path = dir + "/not-json.json";
            std::ofstream out(path, std::ios::binary);
            out << "this file is deliberately not a structure file\n";
            if (!out) {
                std::cerr << "error: cannot write " << path << "\n";
                return 1;
            }
            std::cout << "wrote " << path << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
