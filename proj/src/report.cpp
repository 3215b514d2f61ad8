#include "ringrank/report.hpp"

#include "ringrank/error.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <regex>
#include <sstream>

namespace ringrank {

namespace {

[[noreturn]] void schema(const std::string& msg)
{
    throw Error(Errc::SchemaError, msg);
}

Int parse_int_text(const std::string& s, const std::string& what)
{
    static const std::regex pattern("[-+]?[0-9]+");
    if (!std::regex_match(s, pattern))
        schema(what + ": '" + s + "' is not an integer");
    return Int(s[0] == '+' ? s.substr(1) : s);
}

Int parse_int(const Json& v, const std::string& what)
{
    if (v.is_number_integer()) {
        if (v.is_number_unsigned())
            return Int(std::to_string(v.get<std::uint64_t>()));
        return Int(static_cast<long>(v.get<std::int64_t>()));
    }
    if (v.is_string())
        return parse_int_text(v.get<std::string>(), what);
    schema(what + " must be an integer or a decimal string");
}

IntVec parse_int_list(const Json& v, const std::string& what)
{
    if (!v.is_array())
        schema(what + " must be an array");
    IntVec out;
    for (const auto& x : v)
        out.push_back(parse_int(x, what));
    return out;
}

std::vector<Int> parse_cube(const Json& v, std::size_t n, const std::string& what)
{
    if (!v.is_array() || v.size() != n)
        schema(what + " must be an array of " + std::to_string(n) + " arrays");
    std::vector<Int> out(n * n * n);
    for (std::size_t a = 0; a < n; ++a) {
        if (!v[a].is_array() || v[a].size() != n)
            schema(what + "[" + std::to_string(a) + "] must have " + std::to_string(n) + " entries");
        for (std::size_t b = 0; b < n; ++b) {
            const IntVec c = parse_int_list(v[a][b], what);
            if (c.size() != n)
                schema(what + " entries must be coefficient vectors of length " + std::to_string(n));
            for (std::size_t k = 0; k < n; ++k)
                out[(a * n + b) * n + k] = c[k];
        }
    }
    return out;
}

std::int64_t small(const Int& v, const std::string& what)
{
    if (!fits_int64(v))
        schema(what + " is out of range");
    return to_int64(v);
}

unsigned parse_count(const std::string& s, const std::string& what)
{
    const Int v = parse_int_text(s, what);
    if (v < 0 || v > 1000000)
        schema(what + " is out of range");
    return static_cast<unsigned>(v.get_ui());
}

std::vector<Int> parse_poly_text(const std::string& s)
{
    std::vector<Int> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ','))
        out.push_back(parse_int_text(part, "polynomial coefficient"));
    if (out.empty())
        schema("empty polynomial");
    return out;
}

std::string arg_text(const Json& v)
{
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_number_integer())
        return to_string(parse_int(v, "argument"));
    if (v.is_array()) {
        std::string out;
        for (const auto& x : v) {
            if (!out.empty())
                out += ',';
            out += to_string(parse_int(x, "argument"));
        }
        return out;
    }
    schema("construction arguments must be integers, strings or integer arrays");
}

void expect_args(const std::string& name, const std::vector<std::string>& args, std::size_t lo, std::size_t hi)
{
    if (args.size() < lo || args.size() > hi)
        schema(name + " takes " + (lo == hi ? std::to_string(lo) : std::to_string(lo) + " or more") +
               " arguments, got " + std::to_string(args.size()));
}

Json rank_json(const RankValue& v)
{
    if (v.is_exact())
        return v.lo;
    return Json{{"interval", {v.lo, v.hi}}};
}

Json lattice_rows(const Lattice& l)
{
    Json rows = Json::array();
    for (std::size_t j = 0; j < l.dim(); ++j) {
        Json row = Json::array();
        for (const auto& x : l.column(j))
            row.push_back(json_int(x));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json check(const std::string& name, bool pass, const std::string& detail)
{
    return Json{{"name", name}, {"pass", pass}, {"detail", detail}};
}

std::string timestamp()
{
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

Json error_report(const std::string& id, Errc code, const std::string& message, int exit_code)
{
    return Json{{"status", "error"},
                {"ring_id", id},
                {"exit_code", exit_code},
                {"error", {{"code", std::string(errc_name(code))}, {"message", message}}}};
}

} // namespace

Json json_int(const Int& v)
{
    if (fits_int64(v))
        return to_int64(v);
    return to_string(v);
}

std::vector<std::string> construction_names()
{
    return {"matson", "axs", "pullback", "matson_quotient", "trunc_poly", "semigroup_trunc"};
}

BuiltObject build_named(const std::string& name, const std::vector<std::string>& args)
{
    BuiltObject obj;
    std::string joined;
    for (const auto& a : args)
        joined += (joined.empty() ? "" : " ") + a;
    obj.id = name + "(" + joined + ")";
    if (name == "matson") {
        expect_args(name, args, 1, 1);
        const unsigned n = parse_count(args[0], "n");
        obj.order = build_matson(n);
        std::vector<Int> f(n + 1);
        f[0] = -2;
        f[n] = 1;
        obj.minpoly = std::move(f);
    } else if (name == "axs") {
        expect_args(name, args, 2, 2);
        auto f = parse_poly_text(args[0]);
        obj.order = build_axs(order_from_poly(f), parse_int_text(args[1], "x"));
        obj.minpoly = std::move(f);
    } else if (name == "pullback") {
        expect_args(name, args, 2, static_cast<std::size_t>(-1));
        auto f = parse_poly_text(args[0]);
        std::vector<Int> ps;
        for (std::size_t i = 1; i < args.size(); ++i)
            ps.push_back(parse_int_text(args[i], "prime"));
        obj.order = build_pullback(order_from_poly(f), ps);
        obj.minpoly = std::move(f);
    } else if (name == "matson_quotient") {
        expect_args(name, args, 1, 1);
        obj.ring = build_matson_quotient(parse_count(args[0], "n"));
    } else if (name == "trunc_poly" || name == "semigroup_trunc") {
        expect_args(name, args, 3, 3);
        const Int p = parse_int_text(args[0], "p");
        const unsigned n = parse_count(args[1], "n");
        const unsigned d = parse_count(args[2], "D");
        obj.ring = name == "trunc_poly" ? build_trunc_poly(p, n, d) : build_semigroup_trunc(p, n, d);
    } else {
        schema("unknown construction '" + name + "'");
    }
    return obj;
}

BuiltObject parse_job(const Json& doc)
{
    if (!doc.is_object())
        schema("job document must be a JSON object");
    if (!doc.contains("kind") || !doc["kind"].is_string())
        schema("missing string field 'kind'");
    const std::string kind = doc["kind"].get<std::string>();
    std::string id = kind;
    if (doc.contains("id")) {
        if (!doc["id"].is_string())
            schema("'id' must be a string");
        id = doc["id"].get<std::string>();
    }

    if (kind == "order") {
        if (doc.contains("minpoly") == doc.contains("table"))
            schema("order jobs need exactly one of 'minpoly' and 'table'");
        if (doc.contains("normalization") && doc["normalization"] != "ambient")
            schema("'normalization' must be \"ambient\"");
        BuiltObject obj;
        obj.id = id;
        std::optional<Order> s;
        if (doc.contains("minpoly")) {
            obj.minpoly = parse_int_list(doc["minpoly"], "minpoly");
            s = order_from_poly(*obj.minpoly);
        } else {
            const Json& t = doc["table"];
            if (!t.is_array() || t.empty())
                schema("'table' must be a non-empty array");
            s = Order::from_table(t.size(), parse_cube(t, t.size(), "table"));
        }
        const std::size_t n = s->degree();
        if (doc.contains("suborder_basis")) {
            const Json& b = doc["suborder_basis"];
            if (!b.is_array() || b.size() != n)
                schema("'suborder_basis' must list " + std::to_string(n) + " vectors");
            std::vector<IntVec> cols;
            for (const auto& row : b) {
                IntVec v = parse_int_list(row, "suborder_basis");
                if (v.size() != n)
                    schema("'suborder_basis' rows must have length " + std::to_string(n));
                cols.push_back(std::move(v));
            }
            obj.order = suborder_from_lattice(*s, Lattice::from_generators(IntMat::from_columns(cols, n)));
        } else {
            obj.order = trivial_embedding(*s);
        }
        return obj;
    }
    if (kind == "finring") {
        for (const char* key : {"divisors", "table", "one"})
            if (!doc.contains(key))
                schema(std::string("finring jobs need '") + key + "'");
        const IntVec d = parse_int_list(doc["divisors"], "divisors");
        std::vector<std::int64_t> orders;
        for (const auto& x : d)
            orders.push_back(small(x, "divisor"));
        const std::size_t k = orders.size();
        std::vector<Int> table;
        if (k > 0)
            table = parse_cube(doc["table"], k, "table");
        else if (!doc["table"].is_array() || !doc["table"].empty())
            schema("the zero ring has an empty table");
        const IntVec one = parse_int_list(doc["one"], "one");
        if (one.size() != k)
            schema("'one' must have one entry per divisor");
        BuiltObject obj;
        obj.id = id;
        obj.ring = finring_from_presentation(orders, table, one).ring;
        return obj;
    }
    if (kind == "construction") {
        if (!doc.contains("name") || !doc["name"].is_string())
            schema("construction jobs need a string 'name'");
        std::vector<std::string> args;
        if (doc.contains("args")) {
            if (!doc["args"].is_array())
                schema("'args' must be an array");
            for (const auto& a : doc["args"])
                args.push_back(arg_text(a));
        }
        BuiltObject obj = build_named(doc["name"].get<std::string>(), args);
        if (doc.contains("id"))
            obj.id = id;
        return obj;
    }
    schema("unknown kind '" + kind + "'");
}

Json job_document(const BuiltObject& obj)
{
    Json doc;
    doc["id"] = obj.id;
    if (obj.order) {
        const EmbeddedOrder& r = *obj.order;
        doc["kind"] = "order";
        if (obj.minpoly) {
            Json f = Json::array();
            for (const auto& c : *obj.minpoly)
                f.push_back(json_int(c));
            doc["minpoly"] = std::move(f);
        } else {
            const std::size_t n = r.ambient.degree();
            Json t = Json::array();
            for (std::size_t a = 0; a < n; ++a) {
                Json row = Json::array();
                for (std::size_t b = 0; b < n; ++b) {
                    Json c = Json::array();
                    for (std::size_t k = 0; k < n; ++k)
                        c.push_back(json_int(r.ambient.structure(a, b, k)));
                    row.push_back(std::move(c));
                }
                t.push_back(std::move(row));
            }
            doc["table"] = std::move(t);
        }
        doc["suborder_basis"] = lattice_rows(r.lattice);
        doc["normalization"] = "ambient";
        return doc;
    }
    const FinRing& r = *obj.ring;
    const std::size_t k = r.num_gens();
    doc["kind"] = "finring";
    doc["divisors"] = r.divisors();
    Json t = Json::array();
    for (std::size_t a = 0; a < k; ++a) {
        Json row = Json::array();
        for (std::size_t b = 0; b < k; ++b) {
            Json c = Json::array();
            for (std::size_t x = 0; x < k; ++x)
                c.push_back(r.structure(a, b, x));
            row.push_back(std::move(c));
        }
        t.push_back(std::move(row));
    }
    doc["table"] = std::move(t);
    doc["one"] = r.one();
    return doc;
}

Json rank_report_json(const RankReport& rep)
{
    Json out;
    out["ring_id"] = rep.ring_id;
    out["normal"] = rep.normal;
    out["conductor_index"] = to_string(rep.conductor_index);
    out["ceiling"] = rep.ceiling;
    out["rank"] = rank_json(rep.rank);
    out["notes"] = rep.notes;

    Json checks = Json::array();
    Json primes = Json::array();
    for (const auto& s : rep.singular) {
        const std::string at = "p=" + to_string(s.prime.p) + " f=" + std::to_string(s.prime.f);
        primes.push_back(Json{{"p", json_int(s.prime.p)},
                              {"f", s.prime.f},
                              {"z", s.z},
                              {"e", s.e},
                              {"hilbert", s.hilbert},
                              {"norm", to_string(ideal_norm(s.prime.ideal))},
                              {"basis", lattice_rows(s.prime.ideal.lattice())}});
        checks.push_back(check("z<=e", s.z <= s.e, at + ": z=" + std::to_string(s.z) + " e=" + std::to_string(s.e)));
        checks.push_back(check("e>=2", s.e >= 2, at + ": e=" + std::to_string(s.e)));
    }
    out["singular_primes"] = std::move(primes);

    if (rep.witness) {
        const auto& w = *rep.witness;
        const auto& s = rep.singular[w.prime_index];
        out["witness"] = Json{{"p", json_int(s.prime.p)},
                              {"f", s.prime.f},
                              {"power", w.power},
                              {"mu", w.mu},
                              {"norm", to_string(ideal_norm(w.ideal))},
                              {"basis", lattice_rows(w.ideal.lattice())}};
        checks.push_back(check("witness", w.mu == rep.rank.lo,
                               "local generator count " + std::to_string(w.mu) + " of P^" + std::to_string(w.power)));
    } else {
        out["witness"] = nullptr;
    }
    if (rep.rank.is_exact())
        checks.push_back(check("rank<=degree", rep.rank.lo <= rep.ceiling,
                               std::to_string(rep.rank.lo) + " <= " + std::to_string(rep.ceiling)));
    out["checks"] = std::move(checks);
    return out;
}

Json order_report(const BuiltObject& obj, const std::vector<OrderIdeal>& ideals, const AnalyzeOptions& opts)
{
    const EmbeddedOrder& r = *obj.order;
    Json out = rank_report_json(rank_order(r, obj.id, opts.hilbert_cap));
    out["kind"] = "order";
    out["degree"] = r.order.degree();
    out["index_in_ambient"] = to_string(r.lattice.determinant());
    if (!ideals.empty()) {
        Json list = Json::array();
        for (const auto& i : ideals)
            list.push_back(Json{{"norm", to_string(ideal_norm(i))},
                                {"basis", lattice_rows(i.lattice())},
                                {"mu", rank_json(mu_ideal(r, i))}});
        out["ideals"] = std::move(list);
    }
    return out;
}

Json finring_report(const std::string& id, const FinRing& r, const AnalyzeOptions& opts)
{
    Json out;
    out["kind"] = "finring";
    out["ring_id"] = id;
    out["size"] = to_string(r.size());
    out["divisors"] = r.divisors();
    Json notes = Json::array();
    Json checks = Json::array();

    if (r.is_zero_ring()) {
        out["maximal_ideals"] = Json::array();
        out["length"] = 0;
        out["nilpotency"] = Json{{"elementwise", nullptr}, {"idealwise", nullptr}};
        out["rank"] = 0;
        notes.push_back("zero ring: no maximal ideals, rank 0");
        out["notes"] = std::move(notes);
        out["checks"] = std::move(checks);
        return out;
    }

    const auto factors = local_factors(r);
    Json maxes = Json::array();
    unsigned len = 0;
    Int product = 1;
    for (const auto& lf : factors) {
        len += lf.length;
        product *= ipow(lf.maximal.residue_size(), lf.length);
        maxes.push_back(Json{{"p", json_int(lf.maximal.p)},
                             {"f", lf.maximal.f},
                             {"residue_size", to_string(lf.maximal.residue_size())},
                             {"local_length", lf.length},
                             {"mu", mu_fin(r, lf.maximal.ideal)}});
    }
    out["maximal_ideals"] = std::move(maxes);
    out["length"] = len;
    checks.push_back(check("size=product of local factors", product == r.size(),
                           to_string(product) + " vs " + to_string(r.size())));

    const unsigned ideal_nil = nilpotency_index(r, NilMode::Idealwise);
    Json nil{{"idealwise", ideal_nil}, {"elementwise", nullptr}};
    std::optional<unsigned> elem_nil;
    if (r.size() <= Int(static_cast<unsigned long>(opts.max_ring_size))) {
        elem_nil = nilpotency_index(r, NilMode::Elementwise, opts.max_ring_size);
        nil["elementwise"] = *elem_nil;
    } else {
        notes.push_back("elementwise nilpotency skipped: ring exceeds the size cap");
    }
    out["nilpotency"] = std::move(nil);
    checks.push_back(check("idealwise nilpotency<=length", ideal_nil <= len,
                           std::to_string(ideal_nil) + " <= " + std::to_string(len)));
    if (elem_nil)
        checks.push_back(check("elementwise<=idealwise", *elem_nil <= ideal_nil,
                               std::to_string(*elem_nil) + " <= " + std::to_string(ideal_nil)));

    if (r.size() <= Int(static_cast<unsigned long>(opts.max_ring_size))) {
        IdealOracle oracle(r, opts.max_ring_size);
        const unsigned rank = oracle.rank();
        out["rank"] = rank;
        out["ideal_count"] = oracle.ideals().size();
        const bool field = len == 1;
        checks.push_back(check(field ? "rank=1 for a field" : "rank<=length-1", field ? rank == 1 : rank + 1 <= len,
                               "rank " + std::to_string(rank) + ", length " + std::to_string(len)));
    } else {
        out["rank"] = nullptr;
        notes.push_back("exhaustive rank skipped: ring has " + to_string(r.size()) + " elements, cap is " +
                        std::to_string(opts.max_ring_size));
    }
    out["notes"] = std::move(notes);
    out["checks"] = std::move(checks);
    return out;
}

AnalyzeOutcome analyze_document(const Json& doc, const AnalyzeOptions& opts)
{
    BuiltObject obj;
    std::vector<OrderIdeal> ideals;
    std::string id = doc.is_object() && doc.contains("id") && doc["id"].is_string() ? doc["id"].get<std::string>() : "";
    try {
        obj = parse_job(doc);
        id = obj.id;
        if (doc.contains("ideals")) {
            if (!obj.order)
                schema("'ideals' is only supported for order jobs");
            if (!doc["ideals"].is_array())
                schema("'ideals' must be an array of generator lists");
            for (const auto& gens : doc["ideals"]) {
                if (!gens.is_array())
                    schema("each ideal must be a list of generators");
                std::vector<IntVec> g;
                for (const auto& v : gens)
                    g.push_back(parse_int_list(v, "ideal generator"));
                ideals.push_back(ideal_from_gens(obj.order->order, g));
            }
        }
    } catch (const Error& e) {
        return {error_report(id, e.code(), e.detail(), 2), 2};
    } catch (const Json::exception& e) {
        return {error_report(id, Errc::SchemaError, e.what(), 2), 2};
    }

    AnalyzeOutcome res;
    try {
        res.report = obj.order ? order_report(obj, ideals, opts) : finring_report(obj.id, *obj.ring, opts);
        res.report["status"] = "ok";
        bool all = true;
        for (const auto& c : res.report["checks"])
            all = all && c["pass"].get<bool>();
        res.exit_code = all ? 0 : 3;
        if (!all)
            res.report["status"] = "check_failed";
    } catch (const Error& e) {
        res = {error_report(id, e.code(), e.detail(), 3), 3};
    } catch (const std::exception& e) {
        res = {error_report(id, Errc::InvalidArgument, e.what(), 3), 3};
    }
    if (!opts.deterministic)
        res.report["generated_at"] = timestamp();
    return res;
}

} // namespace ringrank
