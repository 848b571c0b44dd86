#include <qtheta/identity.hpp>

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <mutex>
#include <thread>

namespace qtheta {

namespace {

bool field_matches(const std::optional<long>& want, const std::optional<long>& have) {
  if (!want) return true;
  return have && *have == *want;
}

bool matches(const ParamSel& filter, const ParamSel& key) {
  return field_matches(filter.k, key.k) && field_matches(filter.m, key.m) &&
         field_matches(filter.i, key.i) && field_matches(filter.ip, key.ip) &&
         field_matches(filter.sigma, key.sigma) && field_matches(filter.r, key.r);
}

}  // namespace

VerificationReport verify_case(const IdentityEntry& e, const IdentityCase& c,
                               const VerifyOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.id = e.id;
  rep.params = c.params;
  long order =
      opt.q_order.value_or(opt.profile == Profile::quick ? e.quick_order : e.full_order);
  int grid = e.scale;
  rep.q_order = Rational(order);
  rep.grid = grid;
  try {
    if (opt.grid) {
      if (*opt.grid < 1 || *opt.grid > max_grid_scale || *opt.grid % e.scale != 0)
        throw OffGrid("grid 1/" + std::to_string(*opt.grid) + " cannot host entry " + e.id +
                      " (needs a multiple of 1/" + std::to_string(e.scale) + ")");
      grid = *opt.grid;
      rep.grid = grid;
    }
    Sides s = c.build(order * static_cast<std::int64_t>(e.scale));
    Series lhs = s.lhs, rhs = s.rhs;
    if (grid != e.scale) {
      lhs = regrid(lhs, grid);
      rhs = regrid(rhs, grid);
    }
    if (opt.perturb_lhs)
      lhs = add(lhs, Series::monomial(*opt.perturb_lhs, lhs.scale(), lhs.bound()));
    auto mm = first_mismatch(lhs, rhs, Rational(order));
    if (mm) {
      rep.status = "fail";
      rep.mismatch = *mm;
    } else {
      rep.status = c.conjecture ? "conjecture-pass" : "pass";
    }
  } catch (const OffGrid&) {
    throw;  // usage-level error, surfaced to the caller
  } catch (const NonUnitLeading& ex) {
    rep.status = "error";
    rep.message = std::string("cleared-form audit: ") + ex.what();
  } catch (const Error& ex) {
    rep.status = "error";
    rep.message = ex.what();
  }
  rep.elapsed_ms = static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                         std::chrono::steady_clock::now() - t0)
                                         .count());
  return rep;
}

std::vector<VerificationReport> verify_identity(const std::string& id,
                                                const VerifyOptions& opt) {
  const IdentityEntry* e = find_identity(id);
  if (!e) throw UnknownIdentity("unknown identity id: " + id);
  auto cases = e->cases(opt.profile);
  std::vector<const IdentityCase*> selected;
  for (const auto& c : cases)
    if (matches(opt.filter, c.key)) selected.push_back(&c);
  if (selected.empty()) {
    if (opt.filter.any())
      throw ParamsOutOfDomain("parameters outside the documented domain of " + id);
    throw ParamsOutOfDomain("entry " + id + " has no cases in this profile");
  }
  std::vector<VerificationReport> out;
  out.reserve(selected.size());
  for (const IdentityCase* c : selected) out.push_back(verify_case(*e, *c, opt));
  return out;
}

std::vector<VerificationReport> run_all(
    Profile profile, int jobs, const std::function<void(const VerificationReport&)>& sink) {
  struct Job {
    const IdentityEntry* entry;
    IdentityCase c;
  };
  std::vector<Job> todo;
  for (const auto& e : identity_catalog())
    for (auto& c : e.cases(profile)) todo.push_back({&e, std::move(c)});

  VerifyOptions opt;
  opt.profile = profile;
  std::vector<std::optional<VerificationReport>> done(todo.size());
  if (jobs < 1) jobs = 1;
  jobs = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(jobs), todo.size()));

  std::mutex mu;
  std::condition_variable cv;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= todo.size()) return;
      VerificationReport rep = verify_case(*todo[i].entry, todo[i].c, opt);
      {
        std::lock_guard<std::mutex> lk(mu);
        done[i] = std::move(rep);
      }
      cv.notify_all();
    }
  };
  std::vector<std::thread> pool;
  for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);

  std::vector<VerificationReport> out;
  out.reserve(todo.size());
  for (std::size_t i = 0; i < todo.size(); ++i) {
    std::unique_lock<std::mutex> lk(mu);
    cv.wait(lk, [&] { return done[i].has_value(); });
    out.push_back(*done[i]);
    done[i].reset();
    lk.unlock();
    if (sink) sink(out.back());
  }
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace qtheta
