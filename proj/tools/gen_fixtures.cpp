// Writes the shipped .hcs files: catalog entries plus job files for the cup
// products and the homotopy.  Usage: hcs-fixtures OUTDIR
#include "hcc/cyclic.hpp"
#include "hcc/fixtures.hpp"
#include "hcc/products.hpp"
#include "hcc/specfile.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

using namespace hcc;

namespace {

std::string file_name(std::string name) {
    for (char& c : name)
        if (c == '=') c = '_';
    return name + ".hcs";
}

void write(const std::filesystem::path& dir, const std::string& name, const SpecDocument& doc) {
    std::ofstream out(dir / file_name(name), std::ios::binary);
    out << serialize_spec(doc);
}

Vec representative(const SymmetryBundle& b, std::size_t degree) {
    CyclicComplex cx(b, degree);
    return compute_cohomology(cx, degree).at(degree).representatives.at(0);
}

Vec first_cocycle(const SymmetryBundle& b, std::size_t degree, bool skip_null) {
    CyclicComplex cx(b, degree);
    const Matrix basis = cx.cocycles(degree).basis();
    for (std::size_t r = 0; r < basis.rows(); ++r)
        if (!skip_null || !cx.space(degree).null.contains(basis.row(r))) return basis.row(r);
    throw std::runtime_error("no cocycle found");
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: hcs-fixtures OUTDIR\n";
        return 2;
    }
    const std::filesystem::path dir = argv[1];
    std::filesystem::create_directories(dir);

    for (const std::string name : {"kZ2", "kZ3", "kS3", "sweedler4", "Mtriv", "Msigma", "Mreg-sweedler4",
                                   "Mtriv-badAYD", "kZ2-badcoassoc"})
        write(dir, name, fixture_document(fixture(name)));

    for (const std::string name : {"A=k", "signA", "signA-Msigma", "B=H-kZ2", "B=H-kZ2-Msigma", "B=M2", "C=H-kZ2",
                                   "C=H-kZ2-Msigma", "C=H-kZ3", "C=H-sweedler4"}) {
        SpecBuilder b;
        b.add_bundle(name, *fixture(name).bundle);
        b.add_job({"hc", {{"bundle", name}, {"max_degree", "2"}}});
        write(dir, name, b.document());
    }

    {
        const SymmetryBundle a = *fixture("signA").bundle, bb = *fixture("B=H-kZ2").bundle;
        SpecBuilder b;
        b.add_bundle("signA", a);
        b.add_bundle("B=H-kZ2", bb);
        b.add_cochain("phi", "B=H-kZ2", 2, representative(bb, 2));
        b.add_cochain("tau", "signA", 0, representative(a, 0));
        b.add_job({"cup1", {{"phi", "phi"}, {"psi", "tau"}}});
        write(dir, "cup1-kZ2-signA", b.document());
    }
    for (const std::string coeffs : {"", "-Msigma"}) {
        const SymmetryBundle c = *fixture("C=H-kZ2" + coeffs).bundle, a = *fixture("signA" + coeffs).bundle;
        SpecBuilder b;
        b.add_bundle(c.name, c);
        b.add_bundle(a.name, a);
        b.add_coalgebra_action("pairing", c.name, a.name, hopf_action_pairing(c, a));
        if (coeffs.empty()) {
            // Arbitrary degree-1 data: the closed-formula comparison does not need cocycles.
            b.add_cochain("x", c.name, 1, Vec{Rational(1), Rational(2), Rational(0), Rational(-1)});
            b.add_cochain("psi", a.name, 1, Vec{Rational(0), Rational(1), Rational(3), Rational(1, 2)});
        } else {
            b.add_cochain("x", c.name, 1, first_cocycle(c, 1, true));
            b.add_cochain("psi", a.name, 1, first_cocycle(a, 1, false));
        }
        b.add_job({"cup2", {{"x", "x"}, {"psi", "psi"}, {"action", "pairing"}}});
        write(dir, "cup2-kZ2-signA" + coeffs, b.document());
    }
    {
        const SymmetryBundle c = *fixture("C=H-kZ2").bundle, a = *fixture("signA").bundle;
        SpecBuilder b;
        b.add_bundle(c.name, c);
        b.add_bundle(a.name, a);
        b.add_coalgebra_action("pairing", c.name, a.name, hopf_action_pairing(c, a));
        b.add_cochain("x", c.name, 2, representative(c, 2));
        b.add_cochain("tau", a.name, 0, representative(a, 0));
        b.add_functional("chi", c.name, Vec{Rational(2), Rational(2)});
        b.add_job({"cup2", {{"x", "x"}, {"psi", "tau"}, {"action", "pairing"}}});
        write(dir, "cup2-characteristic-map", b.document());
    }
    {
        const SymmetryBundle m2 = *fixture("B=M2").bundle;
        SpecBuilder b;
        b.add_bundle(m2.name, m2);
        // u = E11 + E12 + E22, inverse E11 - E12 + E22.
        b.add_element("u", m2.name, Vec{Rational(1), Rational(1), Rational(0), Rational(1)});
        b.add_job({"homotopy", {{"u", "u"}, {"max_degree", "2"}}});
        write(dir, "homotopy-M2", b.document());
    }
    return 0;
}
