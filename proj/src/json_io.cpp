#include "wsat/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace wsat {

Json certificate_to_json(const PercolationCertificate& cert) {
    Json j;
    j["initial"] = serialize_hypergraph(cert.initial);
    Json steps = Json::array();
    for (const PercolationStep& st : cert.steps) {
        Json s;
        s["edge"] = st.edge;
        Json emb = Json::object();
        for (std::size_t i = 0; i < st.f.image.size(); ++i)
            emb[std::to_string(i + 1)] = st.f.image[i];
        s["embedding"] = std::move(emb);
        s["designated"] = st.designated;
        steps.push_back(std::move(s));
    }
    j["steps"] = std::move(steps);
    j["final"] = cert.final_claim == FinalClaim::Complete ? "complete" : "closure";
    return j;
}

PercolationCertificate certificate_from_json(const Json& j) {
    try {
        Hypergraph initial = parse_hypergraph(j.at("initial").get<std::string>());
        std::vector<PercolationStep> steps;
        for (const Json& s : j.at("steps")) {
            Edge e = s.at("edge").get<Edge>();
            const Json& emb = s.at("embedding");
            if (!emb.is_object()) throw Error("certificate JSON: embedding must be an object");
            std::vector<Vertex> image(emb.size(), 0);
            for (auto it = emb.begin(); it != emb.end(); ++it) {
                std::size_t pos = 0;
                int key = 0;
                try {
                    key = std::stoi(it.key(), &pos);
                } catch (const std::exception&) {
                    throw Error("certificate JSON: embedding key '" + it.key() +
                                "' is not an integer");
                }
                if (pos != it.key().size() || key < 1 || key > static_cast<int>(image.size()))
                    throw Error("certificate JSON: embedding key '" + it.key() +
                                "' outside 1..|V(H)|");
                image[static_cast<std::size_t>(key - 1)] = it.value().get<Vertex>();
            }
            for (Vertex x : image)
                if (x == 0)
                    throw Error("certificate JSON: embedding does not assign every H-vertex");
            Edge designated = s.at("designated").get<Edge>();
            steps.push_back(
                PercolationStep{std::move(e), Embedding{std::move(image)}, std::move(designated)});
        }
        const std::string fin = j.at("final").get<std::string>();
        FinalClaim claim = FinalClaim::Closure;
        if (fin == "complete")
            claim = FinalClaim::Complete;
        else if (fin != "closure")
            throw Error("certificate JSON: final must be 'complete' or 'closure'");
        return PercolationCertificate{std::move(initial), std::move(steps), claim};
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("certificate JSON: ") + e.what());
    }
}

Json cover_to_json(const CoverFamily& c) {
    Json j;
    j["X"] = c.ground_set;
    j["k"] = c.k;
    j["t"] = c.t;
    j["blocks"] = c.blocks;
    j["delta"] = c.delta;
    j["rodl_bound"] = c.rodl_bound;
    return j;
}

CoverFamily cover_from_json(const Json& j) {
    try {
        CoverFamily c;
        c.ground_set = j.at("X").get<std::vector<Vertex>>();
        c.k = j.at("k").get<int>();
        c.t = j.at("t").get<int>();
        c.blocks = j.at("blocks").get<std::vector<std::vector<Vertex>>>();
        std::sort(c.blocks.begin(), c.blocks.end());
        c.delta = j.at("delta").get<double>();
        c.rodl_bound = j.at("rodl_bound").get<double>();
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("cover JSON: ") + e.what());
    }
}

Json wsat_result_to_json(const WsatResult& r) {
    Json j;
    j["n"] = r.n;
    j["h_id"] = r.h_id;
    j["value"] = r.value;
    j["method"] = method_name(r.method);
    j["minimizer"] = serialize_hypergraph(r.minimizer);
    j["saturation_checks"] = r.saturation_checks;
    j["certificate"] = certificate_to_json(r.certificate);
    return j;
}

Json construction_to_json(const ConstructionResult& c, const PercolationCertificate& cert) {
    Json j;
    j["n"] = c.F.n();
    j["s"] = c.s;
    j["F"] = serialize_hypergraph(c.F);
    j["Z"] = c.Z;
    j["X"] = c.X;
    j["F0"] = serialize_hypergraph(c.F0);
    j["cover"] = cover_to_json(c.cover);
    j["placements"] = c.placements;
    j["certificate"] = certificate_to_json(cert);
    return j;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file: " + path);
    out << content;
    if (!out) throw Error("write failed: " + path);
}

Json parse_json_file(const std::string& path) {
    const std::string text = read_text_file(path);
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error("JSON parse error in " + path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const Json& j) {
    write_text_file(path, j.dump(2) + "\n");
}

}  // namespace wsat
