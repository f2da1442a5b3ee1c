#include "finik/selfcheck.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using nlohmann::ordered_json;
using namespace finik;

namespace {

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct schema_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

ordered_json load_input(const std::string& path)
{
    std::string text;
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(path);
        if (!in)
            throw io_error("cannot read '" + path + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    try {
        return ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw schema_error(std::string("invalid JSON: ") + e.what());
    }
}

Rat json_rat(const ordered_json& v, const std::string& what)
{
    try {
        if (v.is_string())
            return rat_from_string(v.get<std::string>());
        if (v.is_number_integer())
            return Rat(Int(v.get<long long>()));
    } catch (const input_error& e) {
        throw schema_error(what + ": " + e.what());
    }
    throw schema_error(what + " must be an integer or a \"p/q\" string");
}

long long json_int(const ordered_json& v, const std::string& what)
{
    if (!v.is_number_integer())
        throw schema_error(what + " must be an integer");
    return v.get<long long>();
}

const ordered_json& field(const ordered_json& j, const std::string& key)
{
    if (!j.is_object() || !j.contains(key))
        throw schema_error("missing field '" + key + "'");
    return j.at(key);
}

RationalMatrix json_matrix(const ordered_json& j, const std::string& what)
{
    if (!j.is_array())
        throw schema_error(what + " must be an array of rows");
    int rows = static_cast<int>(j.size());
    int cols = rows == 0 ? 0 : static_cast<int>(j.at(0).size());
    RationalMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        if (!j.at(r).is_array() || static_cast<int>(j.at(r).size()) != cols)
            throw schema_error(what + " rows must have equal length");
        for (int c = 0; c < cols; ++c)
            m.at(r, c) = json_rat(j.at(r).at(c), what + " entry");
    }
    return m;
}

SeifertData seifert_from_json(const ordered_json& j)
{
    SeifertData s;
    s.genus = static_cast<int>(json_int(field(j, "genus"), "genus"));
    s.V = json_matrix(field(j, "V"), "V");
    if (j.contains("d"))
        s.d = json_int(j.at("d"), "d");
    if (j.contains("b"))
        s.b = json_int(j.at("b"), "b");
    if (j.contains("h1"))
        s.h1 = json_rat(j.at("h1"), "h1");
    s.validate();
    return s;
}

LinkingTable linking_from_json(const ordered_json& j)
{
    if (!j.is_array())
        throw schema_error("'lk' must be an array of [curve, curve, value] triples");
    LinkingTable t;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 3 || !e.at(0).is_string() || !e.at(1).is_string())
            throw schema_error("'lk' entries must be [curve, curve, value]");
        t.set(e.at(0).get<std::string>(), e.at(1).get<std::string>(),
              json_rat(e.at(2), "lk value"));
    }
    return t;
}

std::vector<SurgerySpec> specs_from_json(const ordered_json& j)
{
    if (!j.is_array())
        throw schema_error("'coeffs' must be an array of [p, q] pairs");
    std::vector<SurgerySpec> out;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2)
            throw schema_error("'coeffs' entries must be [p, q]");
        out.emplace_back(Int(json_int(e.at(0), "p")), Int(json_int(e.at(1), "q")));
    }
    return out;
}

SingularLinkingMatrix singular_from_json(const ordered_json& j)
{
    SingularLinkingMatrix m;
    m.k = static_cast<int>(json_int(field(j, "k"), "k"));
    m.ell = json_matrix(field(j, "ell"), "ell");
    m.validate();
    return m;
}

ordered_json vector_json(const DiagramVector& v)
{
    const DiagramSpace& sp = diagram_space(v.degree);
    std::vector<Rat> coords = sp.reduce(v);
    ordered_json c;
    if (v.degree == 1) {
        c["theta"] = rat_to_string(coords.at(*sp.theta_index()));
    } else if (v.degree == 2) {
        c["theta2"] = rat_to_string(coords.at(*sp.two_theta_index()));
        c["tet"] = rat_to_string(coords.at(*sp.tetrahedron_index()));
    } else {
        throw capability_error("diagram output available in degrees 1 and 2 only");
    }
    ordered_json o;
    o["degree"] = v.degree;
    o["coords"] = c;
    return o;
}

void emit(const ordered_json& j, bool pretty)
{
    if (!pretty) {
        std::cout << j.dump() << "\n";
        return;
    }
    std::size_t width = 0;
    for (const auto& [k, v] : j.items())
        width = std::max(width, k.size());
    for (const auto& [k, v] : j.items()) {
        std::cout << k << std::string(width - k.size(), ' ') << " = ";
        if (v.is_string())
            std::cout << v.get<std::string>();
        else
            std::cout << v.dump();
        std::cout << "\n";
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact finite-type invariants of knots and homology spheres"};
    app.require_subcommand(1);
    bool pretty = false;
    app.add_flag("--pretty", pretty, "aligned text output instead of JSON");

    std::string input = "-";
    long long px = 0, py = 0, pz = 0, p = 0, q = 0, r = 0;
    int n = 1;
    std::string lambda_m = "0", lp = "0", lambda2_m = "0", l2s = "0", w3s = "0", cs = "0",
                rs = "0";

    auto* alexander = app.add_subcommand("alexander", "Alexander polynomial from a Seifert form");
    alexander->add_option("input", input, "JSON file or - for stdin");
    auto* lprime = app.add_subcommand("lambda-prime", "Casson-Walker derivative of a knot");
    lprime->add_option("input", input);
    auto* l2 = app.add_subcommand("lambda2-second", "degree-2 coefficient from a Seifert form");
    l2->add_option("input", input);

    auto* w3p = app.add_subcommand("w3-pretzel", "w3 of an odd pretzel knot");
    w3p->add_option("-x", px)->required();
    w3p->add_option("-y", py)->required();
    w3p->add_option("-z", pz)->required();

    auto* lsurg = app.add_subcommand("lambda-surgery", "Casson-Walker surgery formula");
    lsurg->add_option("--lambda-m", lambda_m, "lambda of the ambient manifold");
    lsurg->add_option("--lambda-prime", lp, "lambda' of the knot")->required();
    lsurg->add_option("-p", p)->required();
    lsurg->add_option("-q", q)->required();

    auto* l2surg = app.add_subcommand("lambda2-surgery", "degree-2 surgery formula, coefficient 1/r");
    l2surg->add_option("--lambda2-m", lambda2_m, "lambda2 of the ambient manifold");
    l2surg->add_option("--lambda2-second", l2s)->required();
    l2surg->add_option("--w3", w3s)->required();
    l2surg->add_option("-r", r)->required();
    l2surg->add_option("--c", cs, "caller-supplied constant term");

    auto* lens = app.add_subcommand("lens", "lambda of the lens space L(p,-q)");
    lens->add_option("-p", p)->required();
    lens->add_option("-q", q)->required();
    auto* dede = app.add_subcommand("dedekind", "Dedekind sum s(p,q)");
    dede->add_option("-p", p)->required();
    dede->add_option("-q", q)->required();

    auto* bboun = app.add_subcommand("bracket-boundary", "boundary-link surgery bracket");
    bboun->add_option("input", input);
    auto* blp = app.add_subcommand("bracket-lp", "Lagrangian-preserving surgery bracket");
    blp->add_option("input", input);
    auto* bas = app.add_subcommand("bracket-as", "algebraically split surgery bracket");
    bas->add_option("input", input);
    auto* basmu = app.add_subcommand("bracket-as-mu0", "algebraically split bracket, vanishing triple numbers");
    basmu->add_option("input", input);

    auto* ylead = app.add_subcommand("y-leading", "leading surgery-polynomial coefficient");
    ylead->add_option("input", input);
    ylead->add_option("-n", n, "degree")->required();
    auto* y2s = app.add_subcommand("y2-singular", "degree-2 polynomial of a two-point singular knot");
    y2s->add_option("input", input);
    y2s->add_option("-r", rs, "surgery parameter (rational)")->required();

    auto* dims = app.add_subcommand("diagram-dims", "dimension of the degree-n diagram space");
    dims->add_option("-n", n)->required();
    auto* self = app.add_subcommand("self-check", "run the full anchor suite");

    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        ordered_json out;
        if (*alexander) {
            out["alexander"] = alexander_from_seifert(seifert_from_json(load_input(input))).to_string();
        } else if (*lprime) {
            out["lambda_prime"] = rat_to_string(lambda_prime(seifert_from_json(load_input(input))));
        } else if (*l2) {
            out["lambda2_second"] = rat_to_string(lambda2_second(seifert_from_json(load_input(input))));
        } else if (*w3p) {
            out["w3"] = rat_to_string(w3_pretzel({px, py, pz}));
        } else if (*lsurg) {
            out["lambda"] = rat_to_string(lambda_surgery(rat_from_string(lambda_m),
                                                         rat_from_string(lp),
                                                         SurgerySpec(p, q)));
        } else if (*l2surg) {
            out["lambda2"] = rat_to_string(lambda2_integral_surgery_with_C(
                rat_from_string(lambda2_m), rat_from_string(l2s), rat_from_string(w3s), r,
                rat_from_string(cs)));
        } else if (*lens) {
            out["lambda"] = rat_to_string(lambda_lens(p, q));
        } else if (*dede) {
            out["s"] = rat_to_string(dedekind_sum(p, q));
        } else if (*bboun) {
            ordered_json j = load_input(input);
            int deg = static_cast<int>(json_int(field(j, "n"), "n"));
            std::vector<int> genus;
            for (const auto& g : field(j, "genus"))
                genus.push_back(static_cast<int>(json_int(g, "genus")));
            out = vector_json(bracket_boundary(deg, genus, linking_from_json(field(j, "lk")),
                                               specs_from_json(field(j, "coeffs"))));
        } else if (*blp) {
            ordered_json j = load_input(input);
            int deg = static_cast<int>(json_int(field(j, "n"), "n"));
            std::vector<HandlebodyDatum> data;
            for (const auto& dj : field(j, "data")) {
                HandlebodyDatum d;
                d.basis_size = static_cast<int>(json_int(field(dj, "basis_size"), "basis_size"));
                for (const auto& e : field(dj, "trilinear")) {
                    if (!e.is_array() || e.size() != 4)
                        throw schema_error("'trilinear' entries must be [i, j, k, value]");
                    d.trilinear[{static_cast<int>(json_int(e.at(0), "i")),
                                 static_cast<int>(json_int(e.at(1), "j")),
                                 static_cast<int>(json_int(e.at(2), "k"))}] =
                        json_rat(e.at(3), "trilinear value");
                }
                for (const auto& name : field(dj, "legs"))
                    d.leg_names.push_back(name.get<std::string>());
                data.push_back(std::move(d));
            }
            out = vector_json(bracket_lp(deg, data, linking_from_json(field(j, "lk"))));
        } else if (*bas) {
            ordered_json j = load_input(input);
            int deg = static_cast<int>(json_int(field(j, "n"), "n"));
            std::map<std::tuple<int, int, int>, Rat> values;
            for (const auto& e : field(j, "mu")) {
                if (!e.is_array() || e.size() != 4)
                    throw schema_error("'mu' entries must be [i, j, k, value]");
                values[{static_cast<int>(json_int(e.at(0), "i")),
                        static_cast<int>(json_int(e.at(1), "j")),
                        static_cast<int>(json_int(e.at(2), "k"))}] = json_rat(e.at(3), "mu value");
            }
            out = vector_json(bracket_as(deg, MilnorTensor(deg, std::move(values)),
                                         specs_from_json(field(j, "coeffs"))));
        } else if (*basmu) {
            ordered_json j = load_input(input);
            int deg = static_cast<int>(json_int(field(j, "n"), "n"));
            IntersectionLinkTable ell;
            for (const auto& e : field(j, "ell")) {
                if (!e.is_array() || e.size() != 3 || !e.at(0).is_array() || !e.at(1).is_array() ||
                    e.at(0).size() != 2 || e.at(1).size() != 2)
                    throw schema_error("'ell' entries must be [[i,j],[k,l],value]");
                ell.set(static_cast<int>(json_int(e.at(0).at(0), "i")),
                        static_cast<int>(json_int(e.at(0).at(1), "j")),
                        static_cast<int>(json_int(e.at(1).at(0), "k")),
                        static_cast<int>(json_int(e.at(1).at(1), "l")),
                        json_rat(e.at(2), "ell value"));
            }
            out = vector_json(bracket_as_mu0(deg, ell, specs_from_json(field(j, "coeffs"))));
        } else if (*ylead) {
            out = vector_json(y_leading(n, seifert_from_json(load_input(input))));
        } else if (*y2s) {
            out["y2"] = rat_to_string(
                y2_singular_polynomial(singular_from_json(load_input(input)), rat_from_string(rs)));
        } else if (*dims) {
            out["dim"] = std::to_string(diagram_space(n).dimension());
        } else if (*self) {
            bool all = true;
            for (const CheckResult& cr : acceptance_suite()) {
                std::cout << cr.name << ": " << (cr.pass ? "pass" : "fail") << "\n";
                if (!cr.pass) {
                    std::cout << "    " << cr.detail << "\n";
                    all = false;
                }
            }
            return all ? 0 : 1;
        }
        emit(out, pretty);
        return 0;
    } catch (const io_error& e) {
        std::cerr << "IO: " << e.what() << "\n";
        return 2;
    } catch (const schema_error& e) {
        std::cerr << "SCHEMA: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "PRE: " << e.what() << "\n";
        return 2;
    }
}
