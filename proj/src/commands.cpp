// Implementation of the command dispatch declared in coalg/commands.hpp.

#include "coalg/commands.hpp"

#include "coalg/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace coalg {

namespace {

using nlohmann::json;

// --- Algebra id resolution -------------------------------------------------------

enum class SpaceKind { Base, Composite, Connection, Faces };

struct Space {
    SpaceKind kind = SpaceKind::Base;
    Alg base = Alg::C;
    CompId comp{Alg::C, Alg::C};
    const Connection* conn = nullptr;
    std::string id;
};

Space resolve_space(const std::string& id) {
    Space s;
    s.id = id;
    if (id == "ssym" || id == "ysym" || id == "csym") {
        s.kind = SpaceKind::Base;
        s.base = id == "ssym" ? Alg::S : (id == "ysym" ? Alg::Y : Alg::C);
        return s;
    }
    if (id == "deltasym") {
        s.kind = SpaceKind::Faces;
        return s;
    }
    if (const Connection* c = find_connection(id)) {
        s.kind = SpaceKind::Connection;
        s.conn = c;
        s.comp = c->comp;
        return s;
    }
    if (parse_comp_name(id, s.comp)) {
        s.kind = SpaceKind::Composite;
        return s;
    }
    throw std::invalid_argument("unknown algebra id: '" + id + "'");
}

bool involves_perms(const Space& s) {
    switch (s.kind) {
        case SpaceKind::Base: return s.base == Alg::S;
        case SpaceKind::Faces: return false;
        default: return s.comp.inner == Alg::S || s.comp.outer == Alg::S;
    }
}

// --- Composite literals, instance-aware ---------------------------------------------

std::string comp_literal(CompId id, const Composed& e) {
    if (id == CompId{Alg::C, Alg::C}) return composition_literal(composed_to_composition(e));
    if (id == CompId{Alg::C, Alg::Y}) return weighted_literal(e);
    return composed_literal(e);
}

Composed comp_parse(CompId id, const std::string& s) {
    if (id == CompId{Alg::C, Alg::C} && !s.empty() && s.front() == '[')
        return composition_to_composed(parse_composition(s));
    if (id == CompId{Alg::C, Alg::Y}) {
        try {
            return parse_weighted(s);
        } catch (const std::invalid_argument&) {
            // fall through to the generic form
        }
    }
    return parse_composed(id, s);
}

// --- Term rendering -----------------------------------------------------------------

struct RTerm {
    int degree = 0;
    std::string literal;
    Int coeff;
};

bool wholly_parenthesized(const std::string& s) {
    if (s.empty() || s.front() != '(') return false;
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        if (s[i] == ')' && --depth == 0) return i + 1 == s.size();
    }
    return false;
}

std::string f_wrap(const std::string& lit) {
    if (lit.find(' ') != std::string::npos && !wholly_parenthesized(lit))
        return "F(" + lit + ")";
    return "F" + lit;
}

void sort_terms(std::vector<RTerm>& terms) {
    std::sort(terms.begin(), terms.end(), [](const RTerm& a, const RTerm& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        return a.literal < b.literal;
    });
}

std::string render_text(std::vector<RTerm> terms, bool f_prefix = true) {
    sort_terms(terms);
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms) {
        Int c = t.coeff;
        const bool neg = c < 0;
        if (neg) c = -c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        if (c != 1) out += c.str() + " ";
        out += f_prefix ? f_wrap(t.literal) : t.literal;
    }
    return out;
}

json render_json(std::vector<RTerm> terms) {
    sort_terms(terms);
    json arr = json::array();
    for (const auto& t : terms) arr.push_back({{"coeff", t.coeff.str()}, {"basis", t.literal}});
    return json{{"terms", arr}};
}

std::string emit(const std::vector<RTerm>& terms, const std::string& format) {
    if (format == "json") return render_json(terms).dump();
    return render_text(terms);
}

template <class B>
std::vector<RTerm> terms_of(const LinearComb<B>& x, const std::function<int(const B&)>& deg,
                            const std::function<std::string(const B&)>& lit) {
    std::vector<RTerm> out;
    for (const auto& [b, c] : x.terms()) out.push_back({deg(b), lit(b), c});
    return out;
}

template <class A, class B>
std::vector<RTerm> pair_terms(const LinearComb<std::pair<A, B>>& x,
                              const std::function<int(const A&)>& dl,
                              const std::function<std::string(const A&)>& ll,
                              const std::function<int(const B&)>& dr,
                              const std::function<std::string(const B&)>& lr,
                              const std::string& format) {
    std::vector<RTerm> out;
    const bool text = format != "json";
    for (const auto& [p, c] : x.terms()) {
        std::string lit = text ? f_wrap(ll(p.first)) + " (x) " + f_wrap(lr(p.second))
                               : ll(p.first) + " (x) " + lr(p.second);
        out.push_back({dl(p.first) * 1000 + dr(p.second), std::move(lit), c});
    }
    return out;
}

std::string emit_pairs(std::vector<RTerm> terms, const std::string& format) {
    if (format == "json") return render_json(std::move(terms)).dump();
    sort_terms(terms);
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms) {
        Int c = t.coeff;
        const bool neg = c < 0;
        if (neg) c = -c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        if (c != 1) out += c.str() + " ";
        out += t.literal;
    }
    return out;
}

std::function<int(const Elem&)> elem_deg = [](const Elem& e) { return degree(e); };
std::function<std::string(const Elem&)> elem_lit = [](const Elem& e) { return elem_literal(e); };
std::function<int(const Composed&)> comp_deg = [](const Composed& e) { return total_degree(e); };
std::function<int(const Face&)> face_deg = [](const Face& f) { return f.n; };
std::function<std::string(const Face&)> face_lit = [](const Face& f) { return face_literal(f); };

std::function<std::string(const Composed&)> comp_lit_fn(CompId id) {
    return [id](const Composed& e) { return comp_literal(id, e); };
}

// --- Verbs ------------------------------------------------------------------------

struct Options {
    std::string format = "text";
    int max_degree = -1;
    std::string axioms;
    unsigned long long seed = 0;
    int sample = 0;
};

CommandResult ok(std::string text) { return {0, std::move(text) + "\n"}; }

CommandResult cmd_product(const std::string& algebra, const std::string& xs,
                          const std::string& ys, const Options& o) {
    const Space s = resolve_space(algebra);
    switch (s.kind) {
        case SpaceKind::Base: {
            const Elem x = parse_elem(s.base, xs), y = parse_elem(s.base, ys);
            return ok(emit(terms_of<Elem>(product(x, y), elem_deg, elem_lit), o.format));
        }
        case SpaceKind::Connection: {
            const Composed x = comp_parse(s.comp, xs), y = comp_parse(s.comp, ys);
            return ok(emit(
                terms_of<Composed>(conn_product(*s.conn, x, y), comp_deg, comp_lit_fn(s.comp)),
                o.format));
        }
        case SpaceKind::Faces: {
            const Face x = parse_face(xs), y = parse_face(ys);
            return ok(emit(terms_of<Face>(face_product(x, y), face_deg, face_lit), o.format));
        }
        default:
            throw std::invalid_argument(
                "no canonical product on the bare composite '" + algebra +
                "'; name a connection such as '" + algebra + ".fr' or '" + algebra + ".fl'");
    }
}

CommandResult cmd_coproduct(const std::string& algebra, const std::string& xs, const Options& o) {
    const Space s = resolve_space(algebra);
    switch (s.kind) {
        case SpaceKind::Base: {
            const Elem x = parse_elem(s.base, xs);
            return ok(emit_pairs(pair_terms<Elem, Elem>(coproduct(x), elem_deg, elem_lit,
                                                        elem_deg, elem_lit, o.format),
                                 o.format));
        }
        case SpaceKind::Faces: {
            const Face x = parse_face(xs);
            return ok(emit_pairs(pair_terms<Face, Face>(face_coproduct(x), face_deg, face_lit,
                                                        face_deg, face_lit, o.format),
                                 o.format));
        }
        default: {
            const Composed x = comp_parse(s.comp, xs);
            auto lit = comp_lit_fn(s.comp);
            return ok(emit_pairs(pair_terms<Composed, Composed>(compose_coproduct(x), comp_deg,
                                                                lit, comp_deg, lit, o.format),
                                 o.format));
        }
    }
}

CommandResult cmd_antipode(const std::string& algebra, const std::string& xs, const Options& o) {
    const Space s = resolve_space(algebra);
    switch (s.kind) {
        case SpaceKind::Base: {
            const Elem x = parse_elem(s.base, xs);
            return ok(emit(terms_of<Elem>(antipode(x), elem_deg, elem_lit), o.format));
        }
        case SpaceKind::Connection: {
            const Composed x = comp_parse(s.comp, xs);
            return ok(emit(
                terms_of<Composed>(conn_antipode(*s.conn, x), comp_deg, comp_lit_fn(s.comp)),
                o.format));
        }
        case SpaceKind::Faces: {
            const Face x = parse_face(xs);
            return ok(emit(terms_of<Face>(face_antipode(x), face_deg, face_lit), o.format));
        }
        default:
            throw std::invalid_argument(
                "the antipode of '" + algebra + "' depends on the connection side; use '" +
                algebra + ".fr' or '" + algebra + ".fl'");
    }
}

CommandResult cmd_primitives(const std::string& algebra, int n, const Options& o) {
    const Space s = resolve_space(algebra);
    Int dim_value;
    std::vector<std::vector<RTerm>> gens;
    switch (s.kind) {
        case SpaceKind::Base: {
            dim_value = primitive_dim(s.base, n);
            if (s.base != Alg::S)
                for (const auto& g : primitive_letters(s.base, n))
                    gens.push_back(terms_of<Elem>(m_to_f(g), elem_deg, elem_lit));
            break;
        }
        case SpaceKind::Faces: {
            const Face one;
            dim_value = reduced_kernel_dim(face_basis(n), [&](const Face& f) {
                LinearComb<std::pair<Face, Face>> red = face_coproduct(f);
                red.add({one, f}, -1);
                red.add({f, one}, -1);
                return red;
            });
            break;
        }
        default: {
            dim_value = compose_primitive_dim(s.comp, n);
            if (s.comp.inner != Alg::S && s.comp.outer != Alg::S)
                for (const auto& g : primitive_generators(s.comp, n))
                    gens.push_back(terms_of<Composed>(g, comp_deg, comp_lit_fn(s.comp)));
            break;
        }
    }
    if (o.format == "json") {
        json jgens = json::array();
        for (auto& g : gens) jgens.push_back(render_json(std::move(g))["terms"]);
        return ok(json{{"dim", dim_value.str()}, {"generators", jgens}}.dump());
    }
    std::string out = "dim " + dim_value.str();
    for (auto& g : gens) out += "\n" + render_text(std::move(g));
    return ok(std::move(out));
}

CommandResult cmd_dim(const std::string& algebra, const std::string& range, const Options& o) {
    const Space s = resolve_space(algebra);
    int lo = 0, hi = 0;
    const auto dots = range.find("..");
    try {
        if (dots == std::string::npos) {
            lo = hi = std::stoi(range);
        } else {
            lo = std::stoi(range.substr(0, dots));
            hi = std::stoi(range.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw std::invalid_argument("bad degree range: '" + range + "'");
    }
    if (lo < 0 || hi < lo) throw std::invalid_argument("bad degree range: '" + range + "'");
    std::vector<Int> values;
    for (int n = lo; n <= hi; ++n) {
        switch (s.kind) {
            case SpaceKind::Base: values.push_back(dim(s.base, n)); break;
            case SpaceKind::Faces: values.push_back(Int(1) << n); break;
            default: values.push_back(compose_dim(s.comp, n)); break;
        }
    }
    if (o.format == "json") {
        json arr = json::array();
        for (const auto& v : values) arr.push_back(v.str());
        return ok(json{{"values", arr}}.dump());
    }
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ' ';
        out += values[i].str();
    }
    return ok(std::move(out));
}

CommandResult cmd_verify(const std::string& algebra, const Options& o) {
    VerifyOptions vo;
    if (o.max_degree >= 0) {
        vo.max_degree = o.max_degree;
    } else if (algebra == "diamond") {
        vo.max_degree = 3;
    } else {
        vo.max_degree = involves_perms(resolve_space(algebra)) ? 5 : 7;
    }
    if (!o.axioms.empty()) {
        std::string cur;
        for (char ch : o.axioms + ",") {
            if (ch == ',') {
                if (!cur.empty()) vo.axioms.push_back(cur);
                cur.clear();
            } else {
                cur += ch;
            }
        }
    }
    vo.seed = o.seed;
    vo.sample = o.sample;
    const std::vector<CheckFailure> failures = verify_algebra(algebra, vo);
    if (o.format == "json") {
        json arr = json::array();
        for (const auto& f : failures)
            arr.push_back({{"axiom", f.axiom}, {"degree", f.degree}, {"witness", f.witness}});
        return {failures.empty() ? 0 : 2, json{{"failures", arr}}.dump() + "\n"};
    }
    if (failures.empty())
        return ok("ok: all checks passed (max degree " + std::to_string(vo.max_degree) + ")");
    std::string out;
    for (const auto& f : failures)
        out += "FAIL " + f.axiom + " degree " + std::to_string(f.degree) + " witness " +
               f.witness + "\n";
    return {2, std::move(out)};
}

CommandResult cmd_mobius(const std::string& ts, const std::string& ss, const Options& o) {
    const BinaryTree t = parse_tree(ts), s2 = parse_tree(ss);
    const Int v = tamari_mobius(t, s2);
    if (o.format == "json") return ok(json{{"value", v.str()}}.dump());
    return ok(v.str());
}

// --- convert ---------------------------------------------------------------------------

enum class FormKind { CompositionF, FaceF, BiLeveledF, MarkedF, WeightedF, PaintedF, ComposedF };

struct Parsed {
    FormKind kind;
    Composition comp;
    Face face;
    BiLeveled bil;
    Composed composed;  // painted / weighted / generic
    CompId comp_id{Alg::C, Alg::C};
};

Parsed detect(const std::string& lit) {
    Parsed p{};
    if (!lit.empty() && lit.front() == '[') {
        p.kind = FormKind::CompositionF;
        p.comp = parse_composition(lit);
        return p;
    }
    if (!lit.empty() && lit.front() == '{') {
        p.kind = FormKind::FaceF;
        p.face = parse_face(lit);
        return p;
    }
    if (lit.find(" !p ") != std::string::npos) {
        p.kind = FormKind::MarkedF;
        p.composed = parse_painted_marked(lit);
        p.comp_id = CompId{Alg::Y, Alg::Y};
        return p;
    }
    if (lit.find(" ! ") != std::string::npos) {
        p.kind = FormKind::BiLeveledF;
        p.bil = parse_bileveled(lit);
        return p;
    }
    const auto at = lit.find(" @ [");
    if (at != std::string::npos) {
        // Sniff the first letter to choose the instance.
        std::size_t i = at + 4;
        while (i < lit.size() && lit[i] == ' ') ++i;
        const char ch = i < lit.size() ? lit[i] : '\0';
        if (ch >= '0' && ch <= '9') {
            p.kind = FormKind::WeightedF;
            p.composed = parse_weighted(lit);
            p.comp_id = CompId{Alg::C, Alg::Y};
            return p;
        }
        if (ch == '(' || ch == '.') {
            p.kind = FormKind::PaintedF;
            p.composed = parse_composed(CompId{Alg::Y, Alg::Y}, lit);
            p.comp_id = CompId{Alg::Y, Alg::Y};
            return p;
        }
        if (ch == 'c') {
            // Comb letters over either a comb base (composition tree) or a
            // tree base (weighted tree in its composed rendering).
            try {
                p.kind = FormKind::ComposedF;
                p.composed = parse_composed(CompId{Alg::C, Alg::C}, lit);
                p.comp_id = CompId{Alg::C, Alg::C};
            } catch (const std::invalid_argument&) {
                p.kind = FormKind::WeightedF;
                p.composed = parse_composed(CompId{Alg::C, Alg::Y}, lit);
                p.comp_id = CompId{Alg::C, Alg::Y};
            }
            return p;
        }
    }
    throw std::invalid_argument("unrecognized literal: '" + lit + "'");
}

CommandResult cmd_convert(const std::string& lit, const std::string& target, const Options& o) {
    const Parsed p = detect(lit);
    std::string out;
    auto fail = [&]() -> std::string {
        throw std::invalid_argument("cannot convert this literal to '" + target + "'");
    };
    if (target == "composition") {
        if (p.kind == FormKind::CompositionF)
            out = composition_literal(p.comp);
        else if (p.kind == FormKind::FaceF)
            out = composition_literal(alpha(p.face));
        else if (p.kind == FormKind::ComposedF)
            out = composition_literal(composed_to_composition(p.composed));
        else
            fail();
    } else if (target == "subset") {
        if (p.kind == FormKind::CompositionF)
            out = face_literal(alpha_inv(p.comp));
        else if (p.kind == FormKind::FaceF)
            out = face_literal(p.face);
        else if (p.kind == FormKind::ComposedF)
            out = face_literal(alpha_inv(composed_to_composition(p.composed)));
        else
            fail();
    } else if (target == "composed") {
        if (p.kind == FormKind::CompositionF)
            out = composed_literal(composition_to_composed(p.comp));
        else if (p.kind == FormKind::FaceF)
            out = composed_literal(composition_to_composed(alpha(p.face)));
        else if (p.kind == FormKind::BiLeveledF)
            out = composed_literal(prune_bileveled(p.bil));
        else if (p.kind == FormKind::MarkedF || p.kind == FormKind::WeightedF ||
                 p.kind == FormKind::PaintedF || p.kind == FormKind::ComposedF)
            out = composed_literal(p.composed);
        else
            fail();
    } else if (target == "weighted") {
        if (p.kind == FormKind::WeightedF)
            out = weighted_literal(p.composed);
        else if (p.kind == FormKind::ComposedF || p.kind == FormKind::PaintedF) {
            if (!(comp_of(p.composed).inner == Alg::C && comp_of(p.composed).outer == Alg::Y))
                fail();
            out = weighted_literal(p.composed);
        } else
            fail();
    } else if (target == "painted") {
        if (p.kind == FormKind::BiLeveledF)
            out = composed_literal(prune_bileveled(p.bil));
        else if (p.kind == FormKind::MarkedF || p.kind == FormKind::PaintedF)
            out = composed_literal(p.composed);
        else
            fail();
    } else if (target == "marked") {
        if (p.kind == FormKind::BiLeveledF)
            out = painted_marked_literal(prune_bileveled(p.bil));
        else if (p.kind == FormKind::MarkedF || p.kind == FormKind::PaintedF)
            out = painted_marked_literal(p.composed);
        else
            fail();
    } else if (target == "bileveled") {
        if (p.kind == FormKind::BiLeveledF)
            out = bileveled_literal(p.bil);
        else if (p.kind == FormKind::MarkedF || p.kind == FormKind::PaintedF)
            out = bileveled_literal(grow_painted(p.composed));
        else
            fail();
    } else {
        throw std::invalid_argument("unknown target form: '" + target + "'");
    }
    if (o.format == "json") return ok(json{{"literal", out}}.dump());
    return ok(std::move(out));
}

}  // namespace

CommandResult run_cli(const std::vector<std::string>& args) {
    CLI::App app{"Exact-arithmetic toolkit for composite combinatorial coalgebras"};
    app.name("coalg");

    Options o;
    std::string algebra, arg1, arg2, range, target;
    int n = 0;

    auto add_common = [&o](CLI::App* sc) {
        sc->add_option("--format", o.format, "Output format")
            ->check(CLI::IsMember({"text", "json"}));
        sc->add_option("--max-degree", o.max_degree, "Sweep bound for verification");
        sc->add_option("--axioms", o.axioms, "Comma-separated axiom filter");
        sc->add_option("--seed", o.seed, "Seed for sampled verification");
        sc->add_option("--sample", o.sample, "Tuples per axiom sweep (0 = exhaustive)");
    };

    CLI::App* product = app.add_subcommand("product", "Product of two basis elements");
    product->add_option("algebra", algebra)->required();
    product->add_option("x", arg1)->required();
    product->add_option("y", arg2)->required();
    add_common(product);

    CLI::App* coproduct = app.add_subcommand("coproduct", "Coproduct of a basis element");
    coproduct->add_option("algebra", algebra)->required();
    coproduct->add_option("x", arg1)->required();
    add_common(coproduct);

    CLI::App* antipode = app.add_subcommand("antipode", "Antipode of a basis element");
    antipode->add_option("algebra", algebra)->required();
    antipode->add_option("x", arg1)->required();
    add_common(antipode);

    CLI::App* primitives = app.add_subcommand("primitives", "Primitive dimension and generators");
    primitives->add_option("algebra", algebra)->required();
    primitives->add_option("n", n)->required();
    add_common(primitives);

    CLI::App* dimc = app.add_subcommand("dim", "Graded dimensions over a degree range");
    dimc->add_option("algebra", algebra)->required();
    dimc->add_option("range", range, "Degree or lo..hi")->required();
    add_common(dimc);

    CLI::App* verify = app.add_subcommand("verify", "Machine-check the algebraic identities");
    verify->add_option("algebra", algebra)->required();
    add_common(verify);

    CLI::App* mobius = app.add_subcommand("mobius", "Mobius function of the rotation order");
    mobius->add_option("t", arg1)->required();
    mobius->add_option("s", arg2)->required();
    add_common(mobius);

    CLI::App* convert = app.add_subcommand("convert", "Convert between literal forms");
    convert->add_option("literal", arg1)->required();
    convert->add_option("target", target)->required();
    add_common(convert);

    app.require_subcommand(1);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        std::ostringstream out;
        out << app.help();
        return {0, out.str()};
    } catch (const CLI::CallForAllHelp&) {
        std::ostringstream out;
        out << app.help("", CLI::AppFormatMode::All);
        return {0, out.str()};
    } catch (const CLI::ParseError& e) {
        return {1, std::string("error: ") + e.what() + "\n"};
    }

    try {
        if (product->parsed()) return cmd_product(algebra, arg1, arg2, o);
        if (coproduct->parsed()) return cmd_coproduct(algebra, arg1, o);
        if (antipode->parsed()) return cmd_antipode(algebra, arg1, o);
        if (primitives->parsed()) return cmd_primitives(algebra, n, o);
        if (dimc->parsed()) return cmd_dim(algebra, range, o);
        if (verify->parsed()) return cmd_verify(algebra, o);
        if (mobius->parsed()) return cmd_mobius(arg1, arg2, o);
        if (convert->parsed()) return cmd_convert(arg1, target, o);
    } catch (const std::invalid_argument& e) {
        return {1, std::string("error: ") + e.what() + "\n"};
    } catch (const std::exception& e) {
        return {1, std::string("error: ") + e.what() + "\n"};
    }
    return {1, "error: no subcommand\n"};
}

}  // namespace coalg
