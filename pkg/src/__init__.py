"""Source package for the HitRatio hashtag recommendation toolkit."""
