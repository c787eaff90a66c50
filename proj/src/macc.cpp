#include "macc/macc.hpp"

#include <algorithm>

namespace macc {

int mod1(long long n, int m) {
  if (m < 1) throw InvalidParameter("mod1: modulus must be positive");
  long long r = n % m;
  if (r < 0) r += m;
  return r == 0 ? m : static_cast<int>(r);
}

std::vector<int> circ_interval(int n, int m, int K) {
  if (K < 1 || n < 1 || n > K || m < 1 || m > K)
    throw InvalidParameter("circ_interval: endpoints must lie in [1, K]");
  std::vector<int> run;
  for (int v = n;; v = mod1(v + 1, K)) {
    run.push_back(v);
    if (v == m) break;
  }
  return run;
}

std::vector<int> CircInterval::members(int K) const {
  std::vector<int> out;
  out.reserve(length);
  for (int r = 0; r < length; ++r) out.push_back(mod1(first + r, K));
  return out;
}

MaccInstance MaccInstance::make(int n_files, int n_caches_users, int access_degree,
                                int memory_index) {
  if (n_files < 1) throw InvalidParameter("N must be >= 1");
  if (n_caches_users < 1) throw InvalidParameter("K must be >= 1");
  if (access_degree < 1 || access_degree > n_caches_users)
    throw InvalidParameter("L must lie in [1, K]");
  MaccInstance inst{n_files, n_caches_users, access_degree, memory_index};
  if (memory_index < 0 || memory_index > inst.max_memory_index())
    throw InvalidParameter("i must lie in [0, ceil(K/L)] (got i=" +
                           std::to_string(memory_index) + ")");
  return inst;
}

DemandProfile DemandProfile::make(const MaccInstance& instance, std::vector<int> demands) {
  if (static_cast<int>(demands.size()) != instance.K())
    throw InvalidParameter("demand profile must have exactly K entries");
  for (int d : demands)
    if (d < 1 || d > instance.n_files)
      throw InvalidParameter("demanded file index out of [1, N]");
  return DemandProfile{std::move(demands)};
}

DemandProfile DemandProfile::distinct(const MaccInstance& instance) {
  std::vector<int> d(instance.K());
  for (int j = 1; j <= instance.K(); ++j) d[j - 1] = mod1(j, instance.n_files);
  return DemandProfile{std::move(d)};
}

CircInterval subfile_interval(const MaccInstance& instance, int subfile) {
  const int K = instance.K();
  if (subfile < 1 || subfile > K) throw InvalidParameter("subfile index out of [1, K]");
  return CircInterval{mod1(subfile - instance.L() + 1, K), std::min(instance.coverage(), K)};
}

PlacementMap place(const MaccInstance& instance) {
  const int K = instance.K(), L = instance.L(), i = instance.i();
  if (i < 1) throw InvalidParameter("place: i = 0 stores nothing; use the trivial corner");
  if (i > instance.max_placement_index())
    throw InvalidParameter("place: i must not exceed floor(K/L)");

  PlacementMap map;
  map.n_caches = K;
  map.cache_contents.resize(K);
  for (int k = 1; k <= K; ++k) {
    auto& stored = map.cache_contents[k - 1];
    for (int r = 1; r <= i; ++r) stored.push_back(mod1(k - (r - 1) * L, K));
    std::sort(stored.begin(), stored.end());
  }
  map.subfile_users.reserve(K);
  for (int m = 1; m <= K; ++m) map.subfile_users.push_back(subfile_interval(instance, m));
  return map;
}

std::vector<int> accessible_subfiles(const MaccInstance& instance, int user) {
  const int K = instance.K(), L = instance.L();
  if (user < 1 || user > K) throw InvalidParameter("user index out of [1, K]");
  std::vector<int> out;
  for (int r = 1; r <= instance.i(); ++r)
    for (int l = 1; l <= L; ++l) out.push_back(mod1(user + l - 1 - (r - 1) * L, K));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> needed_subfiles(const MaccInstance& instance, int user) {
  const auto have = accessible_subfiles(instance, user);
  std::vector<int> out;
  for (int m = 1; m <= instance.K(); ++m)
    if (!std::binary_search(have.begin(), have.end(), m)) out.push_back(m);
  return out;
}

}  // namespace macc
