#include "vll/replay.hpp"

#include <json.hpp>

namespace vll {

  bool ProofReplayReport::structure_holds() const {
    auto instance_ok = [](ModularInstanceFacts const& f) {
      return f.beta_le_alpha && f.inclusion && f.inference_valid;
    };
    return beta_is_congruence && gamma_is_congruence
           && gamma_prime_is_congruence && alpha_is_congruence && xuy_gamma_xyu
           && xyu_beta_xyv && xyv_gamma_xvy && xuy_xvy_in_gamma_join_beta
           && instance_ok(with_gamma) && instance_ok(with_gamma_prime);
  }

  namespace {
    void check_precondition(Word const& u, Word const& v) {
      if (u == v) {
        throw ReplayPrecondition("the identity " + to_string(u) + " = "
                                 + to_string(v) + " is trivial");
      }
      if (!is_balanced(u, v)) {
        throw ReplayPrecondition("the identity " + to_string(u) + " = "
                                 + to_string(v) + " is not balanced");
      }
      auto counts = partition_of(u).per_letter;
      std::uint32_t expected = 1;
      for (auto const& [x, n] : counts) {
        if (x.index() != expected++) {
          throw ReplayPrecondition("the content of " + to_string(u)
                                   + " must be x_1, ..., x_m");
        }
        if (n < 2) {
          throw ReplayPrecondition("letter " + to_string(x) + " occurs once in "
                                   + to_string(u)
                                   + "; every multiplicity must exceed 1");
        }
      }
      std::size_t previous = 0;
      for (auto const& [x, n] : counts) {
        if (previous != 0 && n >= previous) {
          throw ReplayPrecondition(
              "multiplicities of " + to_string(u)
              + " must strictly decrease along x_1, ..., x_m; multiply the "
                "identity on the right by a suitable word first");
        }
        previous = n;
      }
    }

    std::string show_pair(char const* rel, Word const& a, Word const& b) {
      return to_string(a) + " " + rel + " " + to_string(b);
    }
  }  // namespace

  ProofReplayReport proof_replay(Word const& u, Word const& v) {
    check_precondition(u, v);
    auto const counts = partition_of(u);
    auto const m      = static_cast<std::uint32_t>(counts.per_letter.size());
    Word const x({m + 1}), y({m + 2});

    std::vector<std::size_t> parts = counts.sorted;
    parts.push_back(1);
    parts.push_back(1);
    PartitionLambda lambda(parts);
    GSet const      G = build_wlambda(lambda);

    ProofReplayReport r{u, v, x, y, parts, G.size(), G.group().size()};
    auto&             trace = r.trace;
    trace.push_back("lambda = partition(xyu) = (" + to_string(lambda)
                    + "), x = " + to_string(x) + ", y = " + to_string(y));
    trace.push_back("|W_lambda| = " + std::to_string(G.size())
                    + ", |S_lambda| = " + std::to_string(G.group().size()));

    Word const xyu = x + y + u, xyv = x + y + v, yxu = y + x + u,
               yxv = y + x + v, xuy = x + u + y, xvy = x + v + y,
               yux = y + u + x, yvx = y + v + x;
    auto const n  = G.size();
    auto       at = [&](Word const& w) { return G.index(w); };

    auto const beta = Partition::from_classes(
        n, {{at(xyu), at(xyv)}, {at(yxu), at(yxv)}});
    auto const gamma = Partition::from_classes(n,
                                               {{at(xyu), at(xuy)},
                                                {at(xyv), at(xvy)},
                                                {at(yxu), at(yux)},
                                                {at(yxv), at(yvx)}});
    auto const gamma_prime = Partition::from_classes(n,
                                                     {{at(xyu), at(yux)},
                                                      {at(xyv), at(yvx)},
                                                      {at(yxu), at(xuy)},
                                                      {at(yxv), at(xvy)}});
    r.beta_is_congruence        = is_congruence(G, beta);
    r.gamma_is_congruence       = is_congruence(G, gamma);
    r.gamma_prime_is_congruence = is_congruence(G, gamma_prime);
    trace.push_back(std::string("beta is a congruence: ")
                    + (r.beta_is_congruence ? "yes" : "no"));
    trace.push_back(std::string("gamma is a congruence: ")
                    + (r.gamma_is_congruence ? "yes" : "no"));
    trace.push_back(std::string("gamma' is a congruence: ")
                    + (r.gamma_prime_is_congruence ? "yes" : "no"));

    r.xuy_gamma_xyu = gamma.related(at(xuy), at(xyu));
    r.xyu_beta_xyv  = beta.related(at(xyu), at(xyv));
    r.xyv_gamma_xvy = gamma.related(at(xyv), at(xvy));
    auto const gamma_join_beta = join(gamma, beta);
    r.xuy_xvy_in_gamma_join_beta
        = gamma_join_beta.related(at(xuy), at(xvy));
    trace.push_back(show_pair("gamma", xuy, xyu) + ": "
                    + (r.xuy_gamma_xyu ? "yes" : "no"));
    trace.push_back(show_pair("beta", xyu, xyv) + ": "
                    + (r.xyu_beta_xyv ? "yes" : "no"));
    trace.push_back(show_pair("gamma", xyv, xvy) + ": "
                    + (r.xyv_gamma_xvy ? "yes" : "no"));
    trace.push_back("(" + to_string(xuy) + ", " + to_string(xvy)
                    + ") in gamma v beta: "
                    + (r.xuy_xvy_in_gamma_join_beta ? "yes" : "no"));

    std::pair<Word, Word> const generators[] = {
        {xyu, xyv}, {yxu, yxv}, {xuy, xvy}, {yux, yvx}};
    auto const alpha      = congruence_from_pairs(G, generators);
    r.alpha_is_congruence = is_congruence(G, alpha.partition());
    trace.push_back("alpha = congruence generated by (xyu,xyv), (yxu,yxv), "
                    "(xuy,xvy), (yux,yvx): "
                    + std::to_string(alpha.partition().number_of_blocks())
                    + " classes");

    auto facts = [&](Partition const& g,
                     std::size_t      a,
                     std::size_t      b,
                     char const*      name) {
      auto const G_g  = GCongruence::from_partition(G, g);
      auto const G_b  = GCongruence::from_partition(G, beta);
      auto const inst = check_modular_instance(G_g, G_b, alpha);
      ModularInstanceFacts f{};
      f.beta_le_alpha       = leq(G_b, alpha);
      f.equal               = inst.equal;
      f.inclusion           = inst.inclusion;
      f.conclusion_in_alpha = alpha.related(a, b);
      f.inference_valid     = !f.equal || f.conclusion_in_alpha;
      f.lhs_blocks          = inst.lhs.number_of_blocks();
      f.rhs_blocks          = inst.rhs.number_of_blocks();
      trace.push_back(std::string("(") + name + " v beta) ^ alpha "
                      + (f.equal ? "=" : "!=") + " (" + name
                      + " ^ alpha) v beta; inclusion "
                      + (f.inclusion ? "holds" : "fails")
                      + "; conclusion in alpha: "
                      + (f.conclusion_in_alpha ? "yes" : "no"));
      return f;
    };
    if (r.gamma_is_congruence && r.gamma_prime_is_congruence
        && r.beta_is_congruence) {
      r.with_gamma       = facts(gamma, at(xuy), at(xyu), "gamma");
      r.with_gamma_prime = facts(gamma_prime, at(xyu), at(yux), "gamma'");
    }
    return r;
  }

  std::string to_json(ProofReplayReport const& r, int indent) {
    using nlohmann::json;
    auto facts = [](ModularInstanceFacts const& f) {
      return json{{"beta_le_alpha", f.beta_le_alpha},
                  {"sides_equal", f.equal},
                  {"inclusion", f.inclusion},
                  {"lhs_classes", f.lhs_blocks},
                  {"rhs_classes", f.rhs_blocks},
                  {"conclusion_in_alpha", f.conclusion_in_alpha},
                  {"inference_valid", f.inference_valid}};
    };
    json j;
    j["u"]            = to_string(r.u);
    j["v"]            = to_string(r.v);
    j["x"]            = to_string(r.x);
    j["y"]            = to_string(r.y);
    j["lambda"]       = r.lambda;
    j["carrier_size"] = r.carrier_size;
    j["group_order"]  = r.group_order;
    j["congruences"]  = {{"beta", r.beta_is_congruence},
                         {"gamma", r.gamma_is_congruence},
                         {"gamma_prime", r.gamma_prime_is_congruence},
                         {"alpha", r.alpha_is_congruence}};
    j["memberships"]
        = {{"xuy_gamma_xyu", r.xuy_gamma_xyu},
           {"xyu_beta_xyv", r.xyu_beta_xyv},
           {"xyv_gamma_xvy", r.xyv_gamma_xvy},
           {"xuy_xvy_in_gamma_join_beta", r.xuy_xvy_in_gamma_join_beta}};
    j["modular_instance"] = {{"gamma", facts(r.with_gamma)},
                             {"gamma_prime", facts(r.with_gamma_prime)}};
    j["conclusions"]
        = {{"xuy_alpha_xyu", r.with_gamma.conclusion_in_alpha},
           {"xyu_alpha_yux", r.with_gamma_prime.conclusion_in_alpha},
           {"structure_holds", r.structure_holds()}};
    j["trace"] = r.trace;
    return j.dump(indent);
  }

}  // namespace vll
