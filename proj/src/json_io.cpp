#include "monogen/json_io.hpp"

#include "monogen/errors.hpp"

namespace monogen {

json int_to_json(const Int& v) {
    if (auto small = to_int64(v)) return *small;
    return v.str();
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::exception&) {
            throw precondition_failed("malformed integer string in JSON");
        }
    }
    throw precondition_failed("expected an integer or a decimal string");
}

namespace {

json int_list(const std::vector<Int>& v) {
    json out = json::array();
    for (const Int& x : v) out.push_back(int_to_json(x));
    return out;
}

json pair_list(const std::vector<std::pair<Int, Int>>& v) {
    json out = json::array();
    for (const auto& [x, y] : v) out.push_back(json::array({int_to_json(x), int_to_json(y)}));
    return out;
}

std::string rat_str(const Rat& q) {
    return q.str();
}

}

json to_json(const binary_form& f) {
    return json{{"coeffs", int_list(f.c)}};
}

json to_json(const unimodular2& g) {
    return json{{"rows", json::array({json::array({int_to_json(g.a), int_to_json(g.b)}),
                                      json::array({int_to_json(g.c), int_to_json(g.d)})})}};
}

json to_json(const mat3& m) {
    json out = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const Int& v : row) r.push_back(int_to_json(v));
        out.push_back(r);
    }
    return out;
}

json to_json(const ternary_form& q) {
    return json{{"gram2", to_json(q.g)}};
}

json to_json(const ternary_pair& p) {
    return json{{"a", to_json(p.a)}, {"b", to_json(p.b)}};
}

json to_json(const rank_ring& r) {
    json m = json::array();
    for (const auto& row : r.m) m.push_back(int_list(row));
    json c = json::array();
    for (const auto& plane : r.c) {
        json pl = json::array();
        for (const auto& row : plane) pl.push_back(int_list(row));
        c.push_back(pl);
    }
    return json{{"rank", r.rank}, {"m", m}, {"c", c}};
}

json to_json(const ring_element& e) {
    return json{{"coords", int_list(e.x)}};
}

json to_json(const thue_solutions& s) {
    return json{{"form", to_json(s.form)},
                {"target", json{{"value", int_to_json(s.target.value)}, {"absolute", s.target.absolute}}},
                {"height", s.height},
                {"sign_identified", s.sign_identified},
                {"count", s.sols.size()},
                {"solutions", pair_list(s.sols)}};
}

json to_json(const count_report& r) {
    json branches = json::array();
    for (const count_branch& br : r.branches) {
        json b{{"p", int_to_json(br.p)},
               {"q", int_to_json(br.q)},
               {"completion", to_json(br.completion)},
               {"reduced", br.reduced}};
        if (br.reduced) {
            b["h"] = to_json(br.h);
            b["count"] = br.reps.size();
            b["representatives"] = pair_list(br.reps);
        }
        branches.push_back(b);
    }
    return json{{"input", json{{"b", int_to_json(r.input.b)},
                               {"c", int_to_json(r.input.c)},
                               {"d", int_to_json(r.input.d)},
                               {"e", int_to_json(r.input.e)}}},
                {"resolvent", to_json(r.resolvent)},
                {"heights", json{{"cubic", r.cubic_height}, {"quartic", r.quartic_height}, {"reduce", r.reduce_height}}},
                {"branches", branches},
                {"total", int_to_json(r.total)},
                {"complete", r.complete},
                {"distinct_transported", r.distinct_transported}};
}

json to_json(const bound_report& r) {
    json cands = json::array();
    for (const bound_candidate& c : r.candidates)
        cands.push_back(json{{"r", c.r}, {"kappa", c.kappa}, {"bound", int_to_json(c.bound)}});
    return json{{"C", rat_str(r.C)},
                {"r", r.r_star},
                {"kappa", r.kappa_star},
                {"bound", int_to_json(r.bound)},
                {"candidates", cands}};
}

json to_json(const std::vector<sublattice>& ls) {
    json out = json::array();
    for (const sublattice& l : ls)
        out.push_back(json{{"a", int_to_json(l.a)}, {"b", int_to_json(l.b)}, {"d", int_to_json(l.d)}});
    return out;
}

json to_json(const cover_result& c) {
    json out{{"covered", c.covered}};
    if (!c.covered)
        out["witness"] = json::array({int_to_json(c.witness_x), int_to_json(c.witness_y)});
    return out;
}

rank_ring ring_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rank") || !j.contains("m") || !j.contains("c"))
        throw precondition_failed("ring JSON needs the keys rank, m and c");
    if (!j["rank"].is_number_integer())
        throw precondition_failed("rank must be an integer");
    int rank = j["rank"].get<int>();

    auto int_matrix = [](const json& mj) {
        if (!mj.is_array())
            throw precondition_failed("expected an array of arrays of integers");
        std::vector<std::vector<Int>> out;
        for (const json& row : mj) {
            if (!row.is_array())
                throw precondition_failed("expected an array of arrays of integers");
            std::vector<Int> r;
            for (const json& v : row) r.push_back(int_from_json(v));
            out.push_back(std::move(r));
        }
        return out;
    };

    std::vector<std::vector<Int>> m = int_matrix(j["m"]);
    if (!j["c"].is_array())
        throw precondition_failed("c must be an array of integer matrices");
    std::vector<std::vector<std::vector<Int>>> c;
    for (const json& plane : j["c"]) c.push_back(int_matrix(plane));

    return make_ring(rank, std::move(m), std::move(c));
}

}
