#include "arr/partitions.hpp"

#include <algorithm>

#include "arr/error.hpp"

namespace arr {

int SetPartition::element_count() const {
  int n = 0;
  for (const auto& b : blocks) n += static_cast<int>(b.size());
  return n;
}

std::string SetPartition::to_string() const {
  std::string s;
  for (const auto& b : blocks) {
    s += "{";
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(b[i]);
    }
    s += "}";
  }
  return s;
}

std::vector<SetPartition> partitions(int n, int blocks) {
  if (blocks < 1 || blocks > n) throw Error("partitions: block count out of range");
  std::vector<SetPartition> out;
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  // enumerate restricted growth strings in lexicographic order
  auto emit = [&]() {
    int used = *std::max_element(rgs.begin(), rgs.end()) + 1;
    if (used != blocks) return;
    SetPartition p;
    p.blocks.assign(static_cast<std::size_t>(used), {});
    for (int i = 0; i < n; ++i) p.blocks[static_cast<std::size_t>(rgs[static_cast<std::size_t>(i)])].push_back(i + 1);
    out.push_back(std::move(p));
  };
  // rgs[0] = 0; rgs[i] <= max(rgs[0..i-1]) + 1
  auto rec = [&](auto&& self, int i, int mx) -> void {
    if (i == n) {
      emit();
      return;
    }
    for (int v = 0; v <= mx + 1 && v < blocks; ++v) {
      rgs[static_cast<std::size_t>(i)] = v;
      self(self, i + 1, std::max(mx, v));
    }
  };
  rec(rec, 1, 0);
  return out;
}

std::vector<SetPartition> unique_block_partitions(int n, int size) {
  if (size < 2 || size > n) throw Error("unique_block_partitions: size out of range");
  std::vector<SetPartition> out;
  for (const std::vector<int>& s : subsets(n, size)) {
    SetPartition p;
    p.blocks.push_back(s);
    for (int i = 1; i <= n; ++i)
      if (std::find(s.begin(), s.end(), i) == s.end()) p.blocks.push_back({i});
    std::sort(p.blocks.begin(), p.blocks.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                return a.front() < b.front();
              });
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = next; v <= n - (k - static_cast<int>(cur.size())) + 1; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

long long stirling2(int n, int k) {
  if (n == 0 && k == 0) return 1;
  if (n <= 0 || k <= 0 || k > n) return 0;
  return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1);
}

}  // namespace arr
