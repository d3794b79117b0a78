#pragma once

// Persistent hash array mapped trie in the compressed (CHAMP) layout: each node
// keeps inline entries and sub-nodes in two separate bitmap-indexed arrays.
// Every update returns a new version sharing untouched nodes with the old one.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <utility>
#include <vector>

namespace rwd {

template <class K, class V, class Hash = std::hash<K>, class KeyEq = std::equal_to<K>>
class PersistentMap {
  struct Node;
  using NodePtr = std::shared_ptr<const Node>;
  using Entry = std::pair<K, V>;

  static constexpr unsigned kBits = 5;
  static constexpr unsigned kHashBits = 64;

  struct Node {
    std::uint32_t datamap = 0;
    std::uint32_t nodemap = 0;
    // Collision nodes only appear once all hash bits are used up; they keep
    // every entry in `entries` and ignore both bitmaps.
    bool collision = false;
    std::vector<Entry> entries;
    std::vector<NodePtr> children;

    bool single_entry() const { return entries.size() == 1 && children.empty(); }
  };

 public:
  PersistentMap() = default;

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  const V* find(const K& key) const {
    const Node* node = root_.get();
    const std::uint64_t h = hash_of(key);
    unsigned shift = 0;
    while (node != nullptr) {
      if (node->collision) {
        for (const Entry& e : node->entries)
          if (KeyEq{}(e.first, key)) return &e.second;
        return nullptr;
      }
      const std::uint32_t bit = bit_for(h, shift);
      if (node->datamap & bit) {
        const Entry& e = node->entries[index_of(node->datamap, bit)];
        return KeyEq{}(e.first, key) ? &e.second : nullptr;
      }
      if (!(node->nodemap & bit)) return nullptr;
      node = node->children[index_of(node->nodemap, bit)].get();
      shift += kBits;
    }
    return nullptr;
  }

  bool contains(const K& key) const { return find(key) != nullptr; }

  [[nodiscard]] PersistentMap set(K key, V value) const {
    const std::uint64_t h = hash_of(key);
    bool added = false;
    NodePtr root = root_ ? root_ : std::make_shared<const Node>();
    PersistentMap out;
    out.root_ = insert(root, Entry{std::move(key), std::move(value)}, h, 0, added);
    out.size_ = size_ + (added ? 1 : 0);
    return out;
  }

  [[nodiscard]] PersistentMap erase(const K& key) const {
    if (!root_) return *this;
    bool removed = false;
    NodePtr root = remove(root_, key, hash_of(key), 0, removed);
    if (!removed) return *this;
    PersistentMap out;
    out.size_ = size_ - 1;
    if (out.size_ != 0) out.root_ = std::move(root);
    return out;
  }

  template <class F>
  void for_each(F&& f) const {
    if (root_) visit(*root_, f);
  }

  /// Cheap identity test: both values are the very same version.
  bool same_version(const PersistentMap& other) const { return root_ == other.root_; }

  friend bool operator==(const PersistentMap& a, const PersistentMap& b) {
    if (a.root_ == b.root_) return true;
    if (a.size_ != b.size_) return false;
    bool equal = true;
    a.for_each([&](const K& k, const V& v) {
      if (!equal) return;
      const V* other = b.find(k);
      equal = other != nullptr && *other == v;
    });
    return equal;
  }

 private:
  static std::uint64_t hash_of(const K& key) {
    // splitmix64 finalizer; std::hash is the identity for integers.
    std::uint64_t z = static_cast<std::uint64_t>(Hash{}(key)) + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  static std::uint32_t bit_for(std::uint64_t h, unsigned shift) {
    return std::uint32_t{1} << ((h >> shift) & 31u);
  }

  static std::size_t index_of(std::uint32_t bitmap, std::uint32_t bit) {
    return static_cast<std::size_t>(std::popcount(bitmap & (bit - 1)));
  }

  static NodePtr merge_two(Entry a, std::uint64_t ha, Entry b, std::uint64_t hb, unsigned shift) {
    auto node = std::make_shared<Node>();
    if (shift >= kHashBits) {
      node->collision = true;
      node->entries.push_back(std::move(a));
      node->entries.push_back(std::move(b));
      return node;
    }
    const std::uint32_t bita = bit_for(ha, shift);
    const std::uint32_t bitb = bit_for(hb, shift);
    if (bita == bitb) {
      node->nodemap = bita;
      node->children.push_back(merge_two(std::move(a), ha, std::move(b), hb, shift + kBits));
    } else {
      node->datamap = bita | bitb;
      if (bita < bitb) {
        node->entries.push_back(std::move(a));
        node->entries.push_back(std::move(b));
      } else {
        node->entries.push_back(std::move(b));
        node->entries.push_back(std::move(a));
      }
    }
    return node;
  }

  static NodePtr insert(const NodePtr& node, Entry entry, std::uint64_t h, unsigned shift,
                        bool& added) {
    auto copy = std::make_shared<Node>(*node);
    if (node->collision) {
      for (Entry& e : copy->entries) {
        if (KeyEq{}(e.first, entry.first)) {
          e.second = std::move(entry.second);
          return copy;
        }
      }
      copy->entries.push_back(std::move(entry));
      added = true;
      return copy;
    }
    const std::uint32_t bit = bit_for(h, shift);
    if (node->datamap & bit) {
      const std::size_t idx = index_of(node->datamap, bit);
      Entry& existing = copy->entries[idx];
      if (KeyEq{}(existing.first, entry.first)) {
        existing.second = std::move(entry.second);
        return copy;
      }
      const std::uint64_t hexisting = hash_of(existing.first);
      NodePtr sub = merge_two(std::move(existing), hexisting, std::move(entry), h, shift + kBits);
      copy->entries.erase(copy->entries.begin() + static_cast<std::ptrdiff_t>(idx));
      copy->datamap ^= bit;
      copy->nodemap |= bit;
      copy->children.insert(
          copy->children.begin() + static_cast<std::ptrdiff_t>(index_of(copy->nodemap, bit)),
          std::move(sub));
      added = true;
      return copy;
    }
    if (node->nodemap & bit) {
      const std::size_t idx = index_of(node->nodemap, bit);
      copy->children[idx] = insert(node->children[idx], std::move(entry), h, shift + kBits, added);
      return copy;
    }
    copy->datamap |= bit;
    copy->entries.insert(
        copy->entries.begin() + static_cast<std::ptrdiff_t>(index_of(copy->datamap, bit)),
        std::move(entry));
    added = true;
    return copy;
  }

  static NodePtr remove(const NodePtr& node, const K& key, std::uint64_t h, unsigned shift,
                        bool& removed) {
    if (node->collision) {
      for (std::size_t i = 0; i < node->entries.size(); ++i) {
        if (KeyEq{}(node->entries[i].first, key)) {
          auto copy = std::make_shared<Node>(*node);
          copy->entries.erase(copy->entries.begin() + static_cast<std::ptrdiff_t>(i));
          removed = true;
          return copy;
        }
      }
      return node;
    }
    const std::uint32_t bit = bit_for(h, shift);
    if (node->datamap & bit) {
      const std::size_t idx = index_of(node->datamap, bit);
      if (!KeyEq{}(node->entries[idx].first, key)) return node;
      auto copy = std::make_shared<Node>(*node);
      copy->entries.erase(copy->entries.begin() + static_cast<std::ptrdiff_t>(idx));
      copy->datamap ^= bit;
      removed = true;
      return copy;
    }
    if (node->nodemap & bit) {
      const std::size_t idx = index_of(node->nodemap, bit);
      NodePtr sub = remove(node->children[idx], key, h, shift + kBits, removed);
      if (!removed) return node;
      auto copy = std::make_shared<Node>(*node);
      if (sub->single_entry()) {
        // Keep the trie canonical: a lone entry moves up into its parent.
        copy->children.erase(copy->children.begin() + static_cast<std::ptrdiff_t>(idx));
        copy->nodemap ^= bit;
        copy->datamap |= bit;
        copy->entries.insert(
            copy->entries.begin() + static_cast<std::ptrdiff_t>(index_of(copy->datamap, bit)),
            sub->entries.front());
      } else {
        copy->children[idx] = std::move(sub);
      }
      return copy;
    }
    return node;
  }

  template <class F>
  static void visit(const Node& node, F& f) {
    for (const Entry& e : node.entries) f(e.first, e.second);
    for (const NodePtr& child : node.children) visit(*child, f);
  }

  NodePtr root_;
  std::size_t size_ = 0;
};

}  // namespace rwd
