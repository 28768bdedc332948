#pragma once

#include <stdexcept>
#include <vector>

namespace mzsv {

// Streams every weak composition (n_0, ..., n_{s-1}), n_i >= 0, sum n_i = t,
// exactly once, starting from (t, 0, ..., 0). There are C(t+s-1, s-1) of them.
//
//   CompositionIterator it(3, 4);
//   do { use(it.current()); } while (it.next());
class CompositionIterator {
public:
    CompositionIterator(unsigned slots, unsigned total) : c_(slots, 0)
    {
        if (slots == 0) {
            throw std::invalid_argument("CompositionIterator: need at least one slot");
        }
        c_[0] = total;
    }

    [[nodiscard]] const std::vector<unsigned>& current() const { return c_; }

    // Moves to the next composition; false once every composition has been seen.
    bool next()
    {
        const std::size_t last = c_.size() - 1;
        const unsigned tail = c_[last];
        c_[last] = 0;
        std::size_t i = last;
        while (i-- > 0) {
            if (c_[i] > 0) {
                --c_[i];
                c_[i + 1] = tail + 1;
                return true;
            }
        }
        c_[last] = tail;
        return false;
    }

private:
    std::vector<unsigned> c_;
};

} // namespace mzsv
