#pragma once

namespace dlab {

// Learning-success measurements on a held-out set: fraction of correct
// argmax predictions and the unregularized cross-entropy cost.
struct Metrics {
    double accuracy = 0.0;
    double cost = 0.0;
};

} // namespace dlab
